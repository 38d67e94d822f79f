#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "csg/gain_graph.hpp"

namespace csg {

// 17 significant digits: enough to round-trip any double exactly.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <typename Scalar = double>
struct ParsedGraph {
    GainGraph<Scalar> graph;
    std::vector<std::string> labels;  // one per vertex; defaults to the index
};

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline double parse_number(const std::string& tok, long line, const char* what) {
    std::size_t pos = 0;
    double x = 0;
    try {
        x = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'")
            .with_line(line);
    }
    if (pos != tok.size())
        throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'")
            .with_line(line);
    return x;
}

}  // namespace detail

/// Parse the flat graph file format:
///   csg 1            header, format version
///   n <count>        vertex count
///   e  u v re im     edge with phi(u->v) = re + im*i
///   ep u v r t       edge with phi(u->v) = r * e^{i t}
/// '#' starts a comment. Vertex tokens may be indices or string labels;
/// labels are mapped to dense indices in order of first appearance.
template <typename Scalar = double>
ParsedGraph<Scalar> parse_graph_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    long line = 0;
    bool saw_header = false;
    Index n = -1;
    std::vector<typename GainGraph<Scalar>::Edge> edges;
    std::unordered_set<std::uint64_t> seen;  // canonical pair keys
    std::unordered_map<std::string, Index> label_ids;
    std::vector<std::string> labels;

    auto vertex_id = [&](const std::string& tok, long ln) -> Index {
        if (detail::all_digits(tok)) {
            long v = -1;
            try {
                v = std::stol(tok);
            } catch (const std::exception&) {
            }
            if (v < 0 || v >= n)
                throw Error(ErrorCode::BadVertex,
                            "vertex " + tok + " out of range (n = " + std::to_string(n) + ")")
                    .with_line(ln);
            return Index(v);
        }
        auto it = label_ids.find(tok);
        if (it != label_ids.end()) return it->second;
        const Index id = Index(label_ids.size());
        if (id >= n)
            throw Error(ErrorCode::BadVertex,
                        "label '" + tok + "' needs more than n = " + std::to_string(n) +
                            " vertices")
                .with_line(ln);
        label_ids.emplace(tok, id);
        labels[std::size_t(id)] = tok;
        return id;
    };

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "csg" || tok[1] != "1")
                throw Error(ErrorCode::ParseError, "expected header 'csg 1'").with_line(line);
            saw_header = true;
            continue;
        }
        if (tok[0] == "n") {
            if (n >= 0)
                throw Error(ErrorCode::ParseError, "duplicate vertex count").with_line(line);
            if (tok.size() != 2 || !detail::all_digits(tok[1]) || tok[1].size() > 6)
                throw Error(ErrorCode::ParseError, "expected 'n <count>'").with_line(line);
            n = Index(std::stol(tok[1]));
            labels.resize(std::size_t(n));
            for (Index v = 0; v < n; ++v) labels[std::size_t(v)] = std::to_string(v);
            continue;
        }
        if (tok[0] == "e" || tok[0] == "ep") {
            if (n < 0)
                throw Error(ErrorCode::ParseError, "edge before vertex count").with_line(line);
            if (tok.size() != 5)
                throw Error(ErrorCode::ParseError,
                            "expected '" + tok[0] + " u v x y'")
                    .with_line(line);
            const Index u = vertex_id(tok[1], line);
            const Index v = vertex_id(tok[2], line);
            const double a = detail::parse_number(tok[3], line, "number");
            const double b = detail::parse_number(tok[4], line, "number");
            const Complex<Scalar> gain = tok[0] == "e"
                                             ? Complex<Scalar>(Scalar(a), Scalar(b))
                                             : std::polar(Scalar(a), Scalar(b));
            if (u == v)
                throw Error(ErrorCode::SelfLoop, "self-loop at " + tok[1]).with_line(line);
            const std::uint64_t key =
                std::uint64_t(std::min(u, v)) * std::uint64_t(n) + std::uint64_t(std::max(u, v));
            if (!seen.insert(key).second)
                throw Error(ErrorCode::DuplicateEdge,
                            "duplicate edge (" + tok[1] + "," + tok[2] + ")")
                    .with_line(line);
            if (!std::isfinite(gain.real()) || !std::isfinite(gain.imag()) ||
                std::abs(gain) <= zero_gain_floor<Scalar>)
                throw Error(ErrorCode::ZeroGain, "gain must be nonzero").with_line(line);
            edges.push_back({u, v, gain});
            continue;
        }
        throw Error(ErrorCode::ParseError, "unknown directive '" + tok[0] + "'")
            .with_line(line);
    }
    if (!saw_header) throw Error(ErrorCode::ParseError, "empty input").with_line(line);
    if (n < 0) throw Error(ErrorCode::ParseError, "missing vertex count").with_line(line);
    return {GainGraph<Scalar>(n, edges), std::move(labels)};
}

/// Canonical rectangular serialization; parse(serialize(g)) reproduces g with
/// bit-equal gains.
template <typename Scalar>
std::string serialize_graph(const GainGraph<Scalar>& g) {
    std::string out = "csg 1\nn " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               format_real(double(e.gain.real())) + " " + format_real(double(e.gain.imag())) +
               "\n";
    return out;
}

template <typename Scalar = double>
ParsedGraph<Scalar> load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file<Scalar>(buf.str());
}

}  // namespace csg
