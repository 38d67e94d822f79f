#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "csg/cycle_formulas.hpp"
#include "csg/graph_io.hpp"
#include "csg/random_graphs.hpp"

namespace csgtool {

using Graph = csg::GainGraph<double>;
using Cx = std::complex<double>;

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

inline std::string json_complex(const Cx& z) {
    return "[" + csg::format_real(z.real()) + "," + csg::format_real(z.imag()) + "]";
}

inline std::string json_matrix(const csg::DistanceMatrix<double>& d) {
    std::string out = "{\"n\":" + std::to_string(d.n) + ",\"kind\":\"" +
                      csg::distance_kind_name(d.kind) + "\",\"entries\":[";
    for (csg::Index i = 0; i < d.n; ++i)
        for (csg::Index j = 0; j < d.n; ++j)
            out += (i == 0 && j == 0 ? "" : ",") + json_complex(d.entries(i, j));
    return out + "]}";
}

inline std::string json_spectrum(const csg::Spectrum<double>& s) {
    std::string out = "{\"values\":[";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        out += (i ? "," : "") + csg::format_real(s.values[i]);
    return out + "],\"tolerance\":" + csg::format_real(s.tolerance) + "}";
}

inline std::string json_charpoly(const csg::CharPoly<double>& p) {
    std::string out = "{\"coeffs\":[";
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        out += (i ? "," : "") + csg::format_real(p.coeffs[i]);
    return out + "]}";
}

inline std::string json_certificate(const csg::BalanceCertificate<double>& c) {
    if (c.balanced()) {
        std::string out = "{\"status\":\"balanced\",\"zeta\":[";
        for (std::size_t i = 0; i < c.zeta->zeta.size(); ++i)
            out += (i ? "," : "") + json_complex(c.zeta->zeta[i]);
        return out + "]}";
    }
    std::string out = "{\"status\":\"unbalanced\",\"witness_cycle\":{\"vertices\":[";
    const auto& vs = c.witness_cycle->vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "],\"gain\":" + json_complex(*c.witness_gain) + "}}";
}

inline std::string json_report(const csg::CompatibilityReport<double>& r) {
    std::string out = std::string("{\"argument_wise\":") +
                      (r.graph_argument_wise ? "true" : "false") + ",\"modulus_wise\":" +
                      (r.graph_modulus_wise ? "true" : "false") + ",\"distance_compatible\":" +
                      (r.graph_distance_compatible ? "true" : "false") + ",\"witnesses\":[";
    bool first = true;
    auto add = [&](const char* kind, const csg::CompatibilityWitness<double>& w) {
        if (!first) out += ",";
        first = false;
        out += std::string("{\"kind\":\"") + kind + "\",\"pair\":[" + std::to_string(w.u) +
               "," + std::to_string(w.v) + "],\"gains\":[" + json_complex(w.gain_a) + "," +
               json_complex(w.gain_b) + "]}";
    };
    if (r.argument_witness) add("argument", *r.argument_witness);
    if (r.modulus_witness) add("modulus", *r.modulus_witness);
    return out + "]}";
}

inline std::string csv_matrix(const csg::DistanceMatrix<double>& d) {
    std::string out;
    for (csg::Index i = 0; i < d.n; ++i) {
        for (csg::Index j = 0; j < d.n; ++j) {
            const Cx z = d.entries(i, j);
            if (j) out += ",";
            out += csg::format_real(z.real());
            out += z.imag() < 0 ? "-" : "+";
            out += csg::format_real(std::abs(z.imag()));
            out += "i";
        }
        out += "\n";
    }
    return out;
}

/// Run one CLI invocation. args excludes the program name. Returns the exit
/// code: 0 success, 1 domain error, 2 usage or input-file parse error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"distance matrices, balance and spectra of complex-gain graphs", "csg"};
    app.require_subcommand(1);

    double tol = csg::default_tol<double>;
    std::size_t cap = csg::default_gain_cap;
    app.add_option("--tol", tol, "comparison tolerance (relative)")->capture_default_str();
    app.add_option("--cap", cap, "distinct shortest-path gain cap per vertex")
        ->capture_default_str();

    std::string file, which = "auto", format = "json", matrix = "distance", method = "fl",
                mode = "closed", model = "unit";
    csg::Index cyc_n = 3, gen_n = 4, gen_m = 4;
    double cyc_k = 1.0, cyc_theta = 0.0, rmin = 0.5, rmax = 2.0, amin = 0.0,
           amax = 2 * std::numbers::pi;
    std::uint64_t seed = 0;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file")->required();
        cmd->fallthrough();
    };

    auto* validate = app.add_subcommand("validate", "parse a graph file and report its size");
    add_file(validate);
    auto* info = app.add_subcommand("info", "basic structural facts");
    add_file(info);
    auto* balance = app.add_subcommand("balance", "balance certificate");
    add_file(balance);
    auto* compat = app.add_subcommand("compat", "distance-compatibility report");
    add_file(compat);

    auto* dmatrix = app.add_subcommand("dmatrix", "distance matrix");
    add_file(dmatrix);
    dmatrix->add_option("--which", which, "auto|max|min")
        ->check(CLI::IsMember({"auto", "max", "min"}));
    dmatrix->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a graph matrix");
    add_file(spectrum);
    spectrum->add_option("--matrix", matrix, "distance|adjacency|magnitude-distance")
        ->check(CLI::IsMember({"distance", "adjacency", "magnitude-distance"}));

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_file(charpoly);
    charpoly->add_option("--method", method, "fl|elementary")
        ->check(CLI::IsMember({"fl", "elementary"}));
    charpoly->add_option("--matrix", matrix, "distance|adjacency|magnitude-distance")
        ->check(CLI::IsMember({"distance", "adjacency", "magnitude-distance"}));

    auto* cyc = app.add_subcommand("cycle-spectrum", "closed-form odd-cycle distance spectrum");
    cyc->add_option("--n", cyc_n, "odd cycle length")->required();
    cyc->add_option("--k", cyc_k, "gain modulus")->capture_default_str();
    cyc->add_option("--theta", cyc_theta, "cycle-gain argument")->capture_default_str();
    cyc->add_option("--mode", mode, "closed|numeric|both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}));
    cyc->fallthrough();

    auto* swcmd = app.add_subcommand("switch", "apply a seeded random unit switching");
    add_file(swcmd);
    swcmd->add_option("--seed", seed, "rng seed")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "generate a seeded random connected graph");
    gen->add_option("--model", model, "unit|annulus|positive-real|balanced")
        ->check(CLI::IsMember({"unit", "annulus", "positive-real", "balanced"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count")->required();
    gen->add_option("--seed", seed, "rng seed")->capture_default_str();
    gen->add_option("--rmin", rmin, "modulus lower bound")->capture_default_str();
    gen->add_option("--rmax", rmax, "modulus upper bound")->capture_default_str();
    gen->add_option("--argmin", amin, "argument lower bound")->capture_default_str();
    gen->add_option("--argmax", amax, "argument upper bound")->capture_default_str();
    gen->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("csg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // prints help requests to out and diagnostics to err
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        auto load = [&]() { return csg::load_graph_file<double>(file).graph; };
        auto pick_matrix = [&](const Graph& g) -> csg::ComplexMatrix<double> {
            if (matrix == "adjacency") return csg::adjacency_matrix(g);
            if (matrix == "magnitude-distance")
                return csg::distance_matrix(csg::magnitude_graph(g), cap, tol).entries;
            return csg::distance_matrix(g, cap, tol).entries;
        };

        if (*validate) {
            const Graph g = load();
            out << "{\"valid\":true,\"n\":" << g.vertex_count()
                << ",\"edges\":" << g.edge_count() << "}\n";
        } else if (*info) {
            const Graph g = load();
            const bool conn = csg::is_connected(g);
            out << "{\"n\":" << g.vertex_count() << ",\"m\":" << g.edge_count()
                << ",\"connected\":" << (conn ? "true" : "false") << ",\"bipartite\":"
                << (csg::is_bipartite(g) ? "true" : "false") << ",\"blocks\":";
            if (conn)
                out << csg::blocks(g).size();
            else
                out << "null";
            out << "}\n";
        } else if (*balance) {
            out << json_certificate(csg::balance_certificate(load(), tol)) << "\n";
        } else if (*compat) {
            out << json_report(csg::compatibility_report(load(), cap, tol)) << "\n";
        } else if (*dmatrix) {
            const Graph g = load();
            csg::DistanceMatrix<double> d;
            if (which == "max")
                d = csg::distance_matrix_max(g, cap, tol);
            else if (which == "min")
                d = csg::distance_matrix_min(g, cap, tol);
            else
                d = csg::distance_matrix(g, cap, tol);
            out << (format == "csv" ? csv_matrix(d) : json_matrix(d) + "\n");
        } else if (*spectrum) {
            out << json_spectrum(csg::hermitian_eigenvalues(pick_matrix(load()))) << "\n";
        } else if (*charpoly) {
            const Graph g = load();
            csg::CharPoly<double> p;
            if (method == "elementary") {
                if (matrix == "adjacency")
                    p = csg::char_poly_elementary(g);
                else if (matrix == "magnitude-distance")
                    p = csg::char_poly_elementary(
                        csg::associated_complete_graph(csg::magnitude_graph(g), cap, tol));
                else
                    p = csg::char_poly_elementary(csg::associated_complete_graph(g, cap, tol));
            } else {
                p = csg::char_poly(pick_matrix(g));
            }
            out << json_charpoly(p) << "\n";
        } else if (*cyc) {
            const csg::CycleParams<double> params{cyc_n, cyc_k, cyc_theta};
            std::string closed, numeric;
            if (mode != "numeric")
                closed = json_spectrum(csg::cycle_distance_spectrum_closed(params));
            if (mode != "closed")
                numeric = json_spectrum(csg::hermitian_eigenvalues(
                    csg::distance_matrix(csg::canonical_odd_cycle(params), cap, tol).entries));
            if (mode == "closed")
                out << closed << "\n";
            else if (mode == "numeric")
                out << numeric << "\n";
            else
                out << "{\"closed\":" << closed << ",\"numeric\":" << numeric << "}\n";
        } else if (*swcmd) {
            const Graph g = load();
            out << csg::serialize_graph(
                csg::apply_switching(g, csg::random_switching<double>(g.vertex_count(), seed)));
        } else if (*gen) {
            csg::RandomModel<double> rm;
            rm.kind = model == "annulus"         ? csg::GainModel::annulus
                      : model == "positive-real" ? csg::GainModel::positive_real
                      : model == "balanced"      ? csg::GainModel::balanced
                                                 : csg::GainModel::unit;
            rm.modulus_min = rmin;
            rm.modulus_max = rmax;
            rm.arg_min = amin;
            rm.arg_max = amax;
            rm.seed = seed;
            out << csg::serialize_graph(csg::random_csg(rm, gen_n, gen_m));
        }
        return 0;
    } catch (const csg::Error& e) {
        err << "{\"error\":\"" << csg::error_code_name(e.code()) << "\",\"message\":\""
            << json_escape(e.what()) << "\"";
        if (e.witness_pair)
            err << ",\"witness\":[" << e.witness_pair->first << "," << e.witness_pair->second
                << "]";
        if (e.line) err << ",\"line\":" << *e.line;
        err << "}\n";
        // errors attributed to the input file (or its absence) are usage errors
        return (e.code() == csg::ErrorCode::ParseError || e.line) ? 2 : 1;
    }
}

}  // namespace csgtool
