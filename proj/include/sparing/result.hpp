#pragma once

#include <string>
#include <vector>

#include "sparing/graph.hpp"

namespace sparing {

enum class Method { greedy, exact, brute };

inline std::string method_name(Method m) {
    switch (m) {
    case Method::greedy: return "greedy";
    case Method::exact: return "exact";
    case Method::brute: return "brute";
    }
    return "?";
}

/// One loop of the greedy pass: the vertex taken, its degree at that moment
/// (equal to its original degree, see greedy.hpp), the neighbors that became
/// singleton-labeled now, and the mono edges newly found inside that
/// neighborhood.
struct IterationRecord {
    VertexId picked = -1;
    int degree_at_pick = 0;
    std::vector<VertexId> new_singletons;
    EdgeSet new_mono_edges;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct SparingResult {
    std::vector<VertexId> independent_set; // ascending
    int phi = 0;                           // |E(G - I)|
    int phi_literal = 0;                   // size of the per-step accumulator
    std::vector<IterationRecord> trace;    // empty for exact methods
    Method method = Method::greedy;
    EdgeSet discrepancy;        // mono edges the per-step accumulator missed
    bool proven_optimal = true; // false only when a time budget cut a search short

    bool has_discrepancy() const { return !discrepancy.empty(); }

    friend bool operator==(const SparingResult&, const SparingResult&) = default;
};

} // namespace sparing
