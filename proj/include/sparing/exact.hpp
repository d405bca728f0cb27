#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

#include "sparing/graph.hpp"
#include "sparing/greedy.hpp"
#include "sparing/result.hpp"

namespace sparing {

enum class ExactMethod { enumerate_maximal, brute_subsets };

struct ExactConfig {
    ExactMethod method = ExactMethod::enumerate_maximal;
    int vertex_limit_brute = 20;
    std::optional<std::chrono::steady_clock::duration> time_budget;
};

namespace detail {

constexpr int kMaskLimit = 64; // single-word bitmask state

inline std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

/// Ascending-id sequence order; handles the prefix case ({0} < {0,1}).
inline bool mask_lex_less(std::uint64_t mask, const std::vector<VertexId>& best) {
    std::uint64_t rest = mask;
    std::size_t i = 0;
    while (rest != 0 && i < best.size()) {
        VertexId v = std::countr_zero(rest);
        if (v != best[i])
            return v < best[i];
        rest &= rest - 1;
        ++i;
    }
    return rest == 0 && i < best.size();
}

struct ExactSearch {
    const Graph& g;
    int n;
    std::uint64_t all;
    std::vector<std::uint64_t> adj;    // neighbor masks
    std::vector<std::uint64_t> compat; // non-neighbor masks, self excluded
    int total_edges;

    bool has_best = false;
    int best_phi = 0;
    std::vector<VertexId> best_set;

    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool timed_out = false;

    explicit ExactSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        if (n > kMaskLimit)
            throw std::invalid_argument("exact methods support at most " +
                                        std::to_string(kMaskLimit) + " vertices, got " +
                                        std::to_string(n));
        all = n == kMaskLimit ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        adj.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : g.edges()) {
            adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
            adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
        compat.resize(adj.size());
        for (VertexId v = 0; v < n; ++v)
            compat[static_cast<std::size_t>(v)] = all & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
        total_edges = g.edge_count();
    }

    // For independent I every covered edge has exactly one endpoint in I,
    // so |E(G-I)| = m - sum of degrees over I.
    void consider(std::uint64_t independent_mask) {
        int covered = 0;
        for (std::uint64_t rest = independent_mask; rest != 0; rest &= rest - 1)
            covered += g.degree(std::countr_zero(rest));
        int phi = total_edges - covered;
        if (!has_best || phi < best_phi ||
            (phi == best_phi && mask_lex_less(independent_mask, best_set))) {
            has_best = true;
            best_phi = phi;
            best_set.clear();
            for (std::uint64_t rest = independent_mask; rest != 0; rest &= rest - 1)
                best_set.push_back(std::countr_zero(rest));
        }
    }

    bool expired() {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            timed_out = true;
        return timed_out;
    }

    // Bron-Kerbosch with Tomita pivoting over the non-adjacency masks:
    // maximal cliques of the complement are exactly the maximal independent
    // sets of g, and the minimum of |E(G-I)| is attained at one of them
    // (enlarging an independent set never uncovers an edge).
    void enumerate_maximal(std::uint64_t chosen, std::uint64_t cand, std::uint64_t excl) {
        if (expired())
            return;
        if (cand == 0 && excl == 0) {
            consider(chosen);
            return;
        }
        VertexId pivot = -1;
        int pivot_score = -1;
        for (std::uint64_t rest = cand | excl; rest != 0; rest &= rest - 1) {
            VertexId u = std::countr_zero(rest);
            int score = std::popcount(cand & compat[static_cast<std::size_t>(u)]);
            if (score > pivot_score) {
                pivot_score = score;
                pivot = u;
            }
        }
        std::uint64_t ext = cand & ~compat[static_cast<std::size_t>(pivot)];
        for (std::uint64_t rest = ext; rest != 0; rest &= rest - 1) {
            if (timed_out)
                return;
            VertexId v = std::countr_zero(rest);
            enumerate_maximal(chosen | bit(v), cand & compat[static_cast<std::size_t>(v)],
                              excl & compat[static_cast<std::size_t>(v)]);
            cand &= ~bit(v);
            excl |= bit(v);
        }
    }

    void brute_subsets() {
        for (std::uint64_t mask = 0;; ++mask) {
            if ((mask & 0xfff) == 0 && expired())
                return;
            bool independent = true;
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
                if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask) {
                    independent = false;
                    break;
                }
            if (independent)
                consider(mask);
            if (mask == all)
                return;
        }
    }
};

} // namespace detail

/// Exact sparing number: the minimum of |E(G-I)| over independent sets I,
/// with the lexicographically smallest optimal I. If the time budget runs
/// out the best visited candidate is returned with proven_optimal=false.
inline SparingResult sparing_exact(const Graph& g, const ExactConfig& cfg = {}) {
    detail::ExactSearch search(g);
    if (cfg.method == ExactMethod::brute_subsets &&
        g.vertex_count() > cfg.vertex_limit_brute)
        throw std::invalid_argument("brute_subsets refuses graphs above " +
                                    std::to_string(cfg.vertex_limit_brute) + " vertices");
    if (cfg.time_budget) {
        search.deadline = std::chrono::steady_clock::now() + *cfg.time_budget;
        if (cfg.method == ExactMethod::enumerate_maximal) {
            // Warm start: the greedy set is itself maximal, so seeding it can
            // only improve an interrupted bound, never the proven optimum.
            SparingResult seed = run_greedy(g);
            std::uint64_t mask = 0;
            for (VertexId v : seed.independent_set)
                mask |= detail::bit(v);
            search.consider(mask);
        }
    }

    if (cfg.method == ExactMethod::enumerate_maximal)
        search.enumerate_maximal(0, search.all, 0);
    else
        search.brute_subsets();

    SparingResult result;
    result.method = cfg.method == ExactMethod::enumerate_maximal ? Method::exact
                                                                 : Method::brute;
    result.independent_set = search.best_set;
    result.phi = search.best_phi;
    result.phi_literal = search.best_phi;
    result.proven_optimal = !search.timed_out;
    return result;
}

/// Number of edges with at least one endpoint in the independent set.
inline int max_incidence(const Graph& g, std::span<const VertexId> independent_set) {
    if (!is_independent(g, independent_set))
        throw std::invalid_argument("max_incidence requires an independent set");
    EdgeSet uncovered = edges_within(g, complement_vertices(g, independent_set));
    return g.edge_count() - static_cast<int>(uncovered.size());
}

/// Definitional oracle: try every singleton/non-singleton role assignment in
/// which each edge keeps a singleton endpoint, count the edges with two
/// singleton endpoints, and take the minimum. Assignments that cannot be
/// realized injectively from a ground set of the given size are skipped.
/// ground_set_size < 0 means 2n, which is always sufficient.
inline int sparing_brute_labelings(const Graph& g, int ground_set_size = -1) {
    const int n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("labeling brute force limited to 10 vertices");
    const long long gss = ground_set_size < 0 ? 2LL * n : ground_set_size;
    // nonempty non-singleton subsets of a gss-element ground set
    const long long non_singletons =
        gss >= 62 ? std::numeric_limits<long long>::max() : (1LL << gss) - gss - 1;

    std::optional<int> best;
    for (std::uint64_t singleton_mask = 0; singleton_mask < (std::uint64_t{1} << n);
         ++singleton_mask) {
        int singles = std::popcount(singleton_mask);
        if (singles > gss || (n - singles) > non_singletons)
            continue;
        bool valid = true;
        int both_singleton = 0;
        for (const Edge& e : g.edges()) {
            bool u_single = singleton_mask >> e.u & 1;
            bool v_single = singleton_mask >> e.v & 1;
            if (!u_single && !v_single) {
                valid = false;
                break;
            }
            both_singleton += u_single && v_single;
        }
        if (valid && (!best || both_singleton < *best))
            best = both_singleton;
    }
    if (!best)
        throw std::invalid_argument("ground set of size " + std::to_string(gss) +
                                    " admits no labeling of this graph");
    return *best;
}

} // namespace sparing
