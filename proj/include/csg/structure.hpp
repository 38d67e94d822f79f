#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "csg/gain_graph.hpp"

namespace csg {

namespace detail {

// BFS hop counts from src; unreachable vertices get -1.
template <typename Scalar>
std::vector<int> bfs_raw(const GainGraph<Scalar>& g, Index src) {
    std::vector<int> dist(std::size_t(g.vertex_count()), -1);
    dist[std::size_t(src)] = 0;
    std::queue<Index> q;
    q.push(src);
    while (!q.empty()) {
        Index v = q.front();
        q.pop();
        for (auto [w, id] : g.neighbors(v)) {
            if (dist[std::size_t(w)] < 0) {
                dist[std::size_t(w)] = dist[std::size_t(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace detail

template <typename Scalar>
bool is_connected(const GainGraph<Scalar>& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = detail::bfs_raw(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

/// 2-coloring of the underlying graph if one exists (colors 0/1, component by
/// component), nullopt when some odd cycle forbids it.
template <typename Scalar>
std::optional<std::vector<int>> is_bipartite(const GainGraph<Scalar>& g) {
    const Index n = g.vertex_count();
    std::vector<int> color(std::size_t(n), -1);
    for (Index s = 0; s < n; ++s) {
        if (color[std::size_t(s)] >= 0) continue;
        color[std::size_t(s)] = 0;
        std::queue<Index> q;
        q.push(s);
        while (!q.empty()) {
            Index v = q.front();
            q.pop();
            for (auto [w, id] : g.neighbors(v)) {
                if (color[std::size_t(w)] < 0) {
                    color[std::size_t(w)] = 1 - color[std::size_t(v)];
                    q.push(w);
                } else if (color[std::size_t(w)] == color[std::size_t(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace detail {

template <typename Scalar>
struct BlockFinder {
    const GainGraph<Scalar>& g;
    std::vector<int> disc, low;
    std::vector<std::pair<Index, Index>> edge_stack;
    std::vector<std::vector<Index>> out;
    int timer = 0;

    explicit BlockFinder(const GainGraph<Scalar>& graph)
        : g(graph),
          disc(std::size_t(graph.vertex_count()), -1),
          low(std::size_t(graph.vertex_count()), -1) {}

    void pop_block(std::pair<Index, Index> until) {
        std::vector<Index> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.push_back(std::move(verts));
    }

    void dfs(Index v, Index parent_edge) {
        disc[std::size_t(v)] = low[std::size_t(v)] = timer++;
        for (auto [w, id] : g.neighbors(v)) {
            if (id == parent_edge) continue;
            if (disc[std::size_t(w)] < 0) {
                edge_stack.push_back({v, w});
                dfs(w, id);
                low[std::size_t(v)] = std::min(low[std::size_t(v)], low[std::size_t(w)]);
                if (low[std::size_t(w)] >= disc[std::size_t(v)]) pop_block({v, w});
            } else if (disc[std::size_t(w)] < disc[std::size_t(v)]) {
                edge_stack.push_back({v, w});
                low[std::size_t(v)] = std::min(low[std::size_t(v)], disc[std::size_t(w)]);
            }
        }
    }
};

}  // namespace detail

/// Biconnected components of a connected graph as vertex sets; bridge edges
/// form their own two-vertex blocks. Every edge lies in exactly one block.
template <typename Scalar>
std::vector<std::vector<Index>> blocks(const GainGraph<Scalar>& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "blocks need a connected graph");
    if (g.vertex_count() <= 1) return {};
    detail::BlockFinder<Scalar> finder(g);
    finder.dfs(0, -1);
    return std::move(finder.out);
}

/// Hermitian adjacency matrix: a_ij = phi(vi -> vj) when adjacent, else 0.
template <typename Scalar>
ComplexMatrix<Scalar> adjacency_matrix(const GainGraph<Scalar>& g) {
    const Index n = g.vertex_count();
    ComplexMatrix<Scalar> a = ComplexMatrix<Scalar>::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = e.gain;
        a(e.v, e.u) = std::conj(e.gain);
    }
    return a;
}

}  // namespace csg
