#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "sparing/graph.hpp"
#include "sparing/result.hpp"

namespace sparing {

// Iterative max-degree selection. Each round takes an unlabeled vertex of
// maximum degree into the independent set `chosen`, marks its whole open
// neighborhood singleton-labeled, and accumulates in `mono_edges_literal`
// every edge found inside that one neighborhood. A vertex is a candidate
// while it is neither chosen nor singleton-labeled; since every neighbor of
// a chosen vertex is labeled, candidates are never adjacent to chosen
// vertices, and their degree in the residual graph (original minus chosen)
// equals their original degree. The per-step accumulator can miss mono
// edges whose endpoints were labeled by two different rounds, so the final
// answer is recomputed as |E(G - chosen)| and any gap is reported as a
// discrepancy.

struct GreedyState {
    std::vector<VertexId> chosen; // pick order
    std::vector<bool> is_chosen;
    std::vector<bool> singleton_labeled;
    EdgeSet mono_edges_literal;
    std::vector<IterationRecord> records;

    explicit GreedyState(const Graph& g)
        : is_chosen(static_cast<std::size_t>(g.vertex_count()), false),
          singleton_labeled(static_cast<std::size_t>(g.vertex_count()), false) {}

    bool unlabeled(VertexId v) const {
        return !is_chosen[static_cast<std::size_t>(v)] &&
               !singleton_labeled[static_cast<std::size_t>(v)];
    }

    int iteration() const { return static_cast<int>(records.size()); }
};

struct ReplayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unlabeled vertex of maximum degree, smallest id on ties; nullopt when
/// every vertex is labeled.
inline std::optional<VertexId> select_next(const Graph& g, const GreedyState& state) {
    std::optional<VertexId> best;
    int best_degree = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (state.unlabeled(v) && g.degree(v) > best_degree) {
            best = v;
            best_degree = g.degree(v);
        }
    return best;
}

inline void greedy_step(const Graph& g, GreedyState& state, VertexId v) {
    g.check_vertex(v);
    if (!state.unlabeled(v))
        throw std::logic_error("vertex " + std::to_string(v) + " is already labeled");

    IterationRecord record;
    record.picked = v;
    record.degree_at_pick = g.degree(v);

    int residual_degree = 0;
    for (VertexId w : g.neighbors(v)) {
        if (state.is_chosen[static_cast<std::size_t>(w)])
            throw std::logic_error("vertex " + std::to_string(v) +
                                   " has chosen neighbor " + std::to_string(w));
        ++residual_degree;
    }
    // Candidates never touch chosen vertices, so both degree notions agree.
    assert(residual_degree == record.degree_at_pick);
    (void)residual_degree;

    const std::vector<VertexId>& nbrs = g.neighbors(v);
    for (VertexId w : nbrs) {
        if (!state.singleton_labeled[static_cast<std::size_t>(w)]) {
            record.new_singletons.push_back(w);
            state.singleton_labeled[static_cast<std::size_t>(w)] = true;
        }
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) {
                Edge e(nbrs[i], nbrs[j]);
                if (edge_set_insert(state.mono_edges_literal, e))
                    edge_set_insert(record.new_mono_edges, e);
            }

    state.chosen.push_back(v);
    state.is_chosen[static_cast<std::size_t>(v)] = true;
    state.records.push_back(std::move(record));
}

namespace detail {

inline SparingResult finish_greedy(const Graph& g, GreedyState&& state) {
    SparingResult result;
    result.method = Method::greedy;
    result.independent_set = state.chosen;
    std::sort(result.independent_set.begin(), result.independent_set.end());
    assert(is_independent(g, result.independent_set));

    EdgeSet mono = edges_within(g, complement_vertices(g, result.independent_set));
    result.phi = static_cast<int>(mono.size());
    result.phi_literal = static_cast<int>(state.mono_edges_literal.size());
    result.discrepancy = edge_set_difference(mono, state.mono_edges_literal);
    result.trace = std::move(state.records);
    return result;
}

} // namespace detail

inline SparingResult run_greedy(const Graph& g) {
    GreedyState state(g);
    while (auto v = select_next(g, state))
        greedy_step(g, state, *v);
    return detail::finish_greedy(g, std::move(state));
}

/// run_greedy with the pick order supplied instead of computed. Every pick
/// must be unlabeled at its turn and the list must label the whole graph.
inline SparingResult replay_trace(const Graph& g, std::span<const VertexId> picks) {
    GreedyState state(g);
    for (VertexId v : picks) {
        g.check_vertex(v);
        if (!state.unlabeled(v))
            throw ReplayError("pick " + std::to_string(v) + " is already labeled");
        for (VertexId w : g.neighbors(v))
            if (state.is_chosen[static_cast<std::size_t>(w)])
                throw ReplayError("pick " + std::to_string(v) +
                                  " is adjacent to chosen vertex " + std::to_string(w));
        greedy_step(g, state, v);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (state.unlabeled(v))
            throw ReplayError("incomplete pick list: vertex " + std::to_string(v) +
                              " is never labeled");
    return detail::finish_greedy(g, std::move(state));
}

} // namespace sparing
