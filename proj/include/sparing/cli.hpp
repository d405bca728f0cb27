#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sparing/dot.hpp"
#include "sparing/edge_list.hpp"
#include "sparing/exact.hpp"
#include "sparing/generate.hpp"
#include "sparing/graph.hpp"
#include "sparing/greedy.hpp"
#include "sparing/labeling.hpp"

namespace sparing::cli {

// Exit codes: 0 ok, 2 input error, 3 budget exceeded (result is an upper
// bound, not proven optimal), 4 verification failure.
enum ExitCode { kOk = 0, kInternalError = 1, kInputError = 2, kBudgetExceeded = 3,
                kVerificationFailure = 4 };

struct RunConfig {
    std::string command = "sparing"; // sparing | label | trace | gen | compare
    std::string gen_spec;            // e.g. "cycle:5", "random:20,0.3,7", "figure1"
    std::string input_path;          // edge-list file, alternative to gen_spec
    std::string method = "greedy";   // greedy | exact | brute
    std::uint64_t seed = 0;
    std::optional<double> budget_seconds;
    std::string dot_path;
    std::string csv_path;
    bool trace = false;
    // compare batch parameters
    int count = 20;
    int n_min = 4;
    int n_max = 12;
    double p_min = 0.1;
    double p_max = 0.6;
};

struct CompareRow {
    int id = 0;
    int n = 0;
    int m = 0;
    int phi_greedy = 0;
    int phi_literal = 0;
    int phi_exact = 0;
    int gap = 0;
    bool greedy_optimal = false;
    double t_greedy_ms = 0.0;
    double t_exact_ms = 0.0;
};

inline std::string format_vertex_list(std::span<const VertexId> vertices) {
    if (vertices.empty())
        return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out << (i ? "," : "") << vertices[i];
    return out.str();
}

inline std::string format_edge_list(const EdgeSet& edges) {
    if (edges.empty())
        return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? "," : "") << edges[i].u << "-" << edges[i].v;
    return out.str();
}

inline std::string format_set_label(const SetLabel& label) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < label.elements().size(); ++i)
        out << (i ? "," : "") << label.elements()[i];
    out << "}";
    return out.str();
}

/// Inline generator specs: figure1, path:n, cycle:n, complete:n,
/// complete_bipartite:m,n, random:n,p[,seed] (seed defaults to --seed).
inline Graph graph_from_spec(const std::string& spec, std::uint64_t default_seed) {
    std::string name = spec;
    std::vector<std::string> args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::istringstream rest(spec.substr(colon + 1));
        std::string piece;
        while (std::getline(rest, piece, ','))
            args.push_back(piece);
    }
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("generator '" + name + "' given " +
                                        std::to_string(args.size()) + " arguments");
    };
    auto as_int = [&](std::size_t i) { return std::stoi(args.at(i)); };
    try {
        if (name == "figure1") {
            arity(0, 0);
            return make_figure1();
        }
        if (name == "path") {
            arity(1, 1);
            return make_path(as_int(0));
        }
        if (name == "cycle") {
            arity(1, 1);
            return make_cycle(as_int(0));
        }
        if (name == "complete") {
            arity(1, 1);
            return make_complete(as_int(0));
        }
        if (name == "complete_bipartite") {
            arity(2, 2);
            return make_complete_bipartite(as_int(0), as_int(1));
        }
        if (name == "random") {
            arity(2, 3);
            std::uint64_t seed = args.size() == 3 ? std::stoull(args[2]) : default_seed;
            return make_random(as_int(0), std::stod(args[1]), seed);
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad arguments in generator spec '" + spec + "'");
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

inline Graph load_graph(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) {
        std::ifstream file(cfg.input_path);
        if (!file)
            throw std::invalid_argument("cannot open " + cfg.input_path);
        std::ostringstream text;
        text << file.rdbuf();
        try {
            return parse_edge_list(text.str());
        } catch (const ParseError& e) {
            throw ParseError(e.line_number, cfg.input_path + ": " + e.what());
        }
    }
    if (!cfg.gen_spec.empty())
        return graph_from_spec(cfg.gen_spec, cfg.seed);
    throw std::invalid_argument("no input: pass --gen <spec> or --in <path>");
}

inline ExactConfig exact_config(const RunConfig& cfg) {
    ExactConfig ec;
    ec.method = cfg.method == "brute" ? ExactMethod::brute_subsets
                                      : ExactMethod::enumerate_maximal;
    if (cfg.budget_seconds)
        ec.time_budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(*cfg.budget_seconds));
    return ec;
}

inline SparingResult solve(const Graph& g, const RunConfig& cfg) {
    if (cfg.method == "greedy")
        return run_greedy(g);
    if (cfg.method == "exact" || cfg.method == "brute")
        return sparing_exact(g, exact_config(cfg));
    throw std::invalid_argument("unknown method '" + cfg.method + "'");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << content;
}

inline void print_trace_lines(const SparingResult& result, std::ostream& out) {
    for (const IterationRecord& record : result.trace)
        out << "pick=" << record.picked << " deg=" << record.degree_at_pick
            << " new_singletons=" << format_vertex_list(record.new_singletons)
            << " new_mono_edges=" << format_edge_list(record.new_mono_edges) << "\n";
}

inline int cmd_sparing(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg);
    auto start = std::chrono::steady_clock::now();
    SparingResult result = solve(g, cfg);
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    if (cfg.trace)
        print_trace_lines(result, out);
    out << "phi=" << result.phi << " I=" << format_vertex_list(result.independent_set)
        << " method=" << method_name(result.method);
    if (result.method == Method::greedy)
        out << " phi_literal=" << result.phi_literal
            << " discrepancy=" << format_edge_list(result.discrepancy);
    out << " elapsed=" << std::fixed << std::setprecision(3) << elapsed << "ms";
    if (!result.proven_optimal)
        out << " status=upper_bound";
    out << "\n";

    if (!cfg.dot_path.empty()) {
        EdgeSet mono = edges_within(g, complement_vertices(g, result.independent_set));
        write_file(cfg.dot_path, to_dot(g, result.independent_set, mono));
    }
    return result.proven_optimal ? kOk : kBudgetExceeded;
}

inline int cmd_trace(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg);
    SparingResult result = run_greedy(g);
    print_trace_lines(result, out);
    out << "I=" << format_vertex_list(result.independent_set) << "\n";
    out << "phi=" << result.phi << "\n";
    out << "phi_literal=" << result.phi_literal << "\n";
    out << "discrepancy=" << format_edge_list(result.discrepancy) << "\n";
    return kOk;
}

inline int cmd_label(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(cfg);
    SparingResult result = solve(g, cfg);
    WiaslLabeling lab = build_labeling(g, result.independent_set);
    VerificationReport report = verify_wiasl(g, lab);
    if (!report.passed()) {
        err << "verification failed: " << report.duplicate_label_pairs.size()
            << " duplicate labels, " << format_edge_list(report.wrong_sumset_edges)
            << " wrong sumsets, " << format_edge_list(report.weak_condition_failures)
            << " weak-condition failures, " << format_edge_list(report.uncovered_edges)
            << " uncovered edges\n";
        return kVerificationFailure;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "v " << v << " "
            << format_set_label(lab.vertex_labels[static_cast<std::size_t>(v)]) << "\n";
    for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
        const Edge& e = g.edges()[idx];
        const SetLabel& label = lab.edge_labels[idx];
        out << "e " << e.u << " " << e.v << " " << format_set_label(label)
            << " mono=" << (label.is_singleton() ? 1 : 0) << "\n";
    }
    if (!cfg.dot_path.empty()) {
        EdgeSet mono;
        for (std::size_t idx = 0; idx < g.edges().size(); ++idx)
            if (lab.edge_labels[idx].is_singleton())
                mono.push_back(g.edges()[idx]);
        write_file(cfg.dot_path, to_dot(g, lab.independent_set, mono));
    }
    return kOk;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    if (cfg.gen_spec.empty())
        throw std::invalid_argument("gen requires --gen <spec>");
    Graph g = graph_from_spec(cfg.gen_spec, cfg.seed);
    out << serialize_edge_list(g);
    if (!cfg.dot_path.empty())
        write_file(cfg.dot_path, to_dot(g));
    return kOk;
}

inline CompareRow compare_one(const Graph& g, int id, ExactMethod exact_method) {
    CompareRow row;
    row.id = id;
    row.n = g.vertex_count();
    row.m = g.edge_count();

    auto t0 = std::chrono::steady_clock::now();
    SparingResult greedy = run_greedy(g);
    auto t1 = std::chrono::steady_clock::now();
    ExactConfig ec;
    ec.method = exact_method;
    SparingResult exact = sparing_exact(g, ec);
    auto t2 = std::chrono::steady_clock::now();

    row.phi_greedy = greedy.phi;
    row.phi_literal = greedy.phi_literal;
    row.phi_exact = exact.phi;
    row.gap = greedy.phi - exact.phi;
    row.greedy_optimal = row.gap == 0;
    row.t_greedy_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.t_exact_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return row;
}

/// Deterministic batch: instance i draws its size, density and graph from a
/// stream seeded by (seed, i) only.
inline std::vector<CompareRow> compare_batch(const RunConfig& cfg) {
    ExactMethod exact_method = cfg.method == "brute" ? ExactMethod::brute_subsets
                                                     : ExactMethod::enumerate_maximal;
    std::vector<CompareRow> rows;
    if (!cfg.gen_spec.empty() || !cfg.input_path.empty()) {
        rows.push_back(compare_one(load_graph(cfg), 0, exact_method));
        return rows;
    }
    if (cfg.count < 1 || cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.p_min < 0 ||
        cfg.p_max > 1 || cfg.p_max < cfg.p_min)
        throw std::invalid_argument("bad compare batch parameters");
    for (int id = 0; id < cfg.count; ++id) {
        std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * (id + 1));
        int n = cfg.n_min + static_cast<int>(rng() % (cfg.n_max - cfg.n_min + 1));
        double p = cfg.p_min + (cfg.p_max - cfg.p_min) *
                                   (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        rows.push_back(compare_one(make_random(n, p, rng()), id, exact_method));
    }
    return rows;
}

inline void write_compare_csv(const std::vector<CompareRow>& rows, std::ostream& out) {
    out << "id,n,m,phi_greedy,phi_literal,phi_exact,gap,greedy_optimal,"
           "t_greedy_ms,t_exact_ms\n";
    double gap_sum = 0;
    int gap_max = 0;
    int optimal = 0;
    for (const CompareRow& row : rows) {
        out << row.id << "," << row.n << "," << row.m << "," << row.phi_greedy << ","
            << row.phi_literal << "," << row.phi_exact << "," << row.gap << ","
            << (row.greedy_optimal ? "true" : "false") << "," << std::fixed
            << std::setprecision(3) << row.t_greedy_ms << "," << row.t_exact_ms << "\n";
        gap_sum += row.gap;
        gap_max = std::max(gap_max, row.gap);
        optimal += row.greedy_optimal;
    }
    const double count = rows.empty() ? 1.0 : static_cast<double>(rows.size());
    out << "# mean_gap=" << std::fixed << std::setprecision(4) << gap_sum / count
        << " max_gap=" << gap_max << " greedy_optimal_fraction=" << std::setprecision(4)
        << static_cast<double>(optimal) / count << "\n";
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    std::vector<CompareRow> rows = compare_batch(cfg);
    if (!cfg.csv_path.empty()) {
        std::ostringstream csv;
        write_compare_csv(rows, csv);
        write_file(cfg.csv_path, csv.str());
    } else {
        write_compare_csv(rows, out);
    }
    return kOk;
}

/// Dispatch with the exit-code contract; catches domain errors, not bugs.
inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "sparing")
            return cmd_sparing(cfg, out);
        if (cfg.command == "trace")
            return cmd_trace(cfg, out);
        if (cfg.command == "label")
            return cmd_label(cfg, out, err);
        if (cfg.command == "gen")
            return cmd_gen(cfg, out);
        if (cfg.command == "compare")
            return cmd_compare(cfg, out);
        err << "unknown command '" << cfg.command << "'\n";
        return kInputError;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const ReplayError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

} // namespace sparing::cli
