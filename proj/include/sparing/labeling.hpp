#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "sparing/graph.hpp"

namespace sparing {

/// Finite nonempty set of non-negative integers, kept sorted and unique.
class SetLabel {
public:
    explicit SetLabel(std::vector<int> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        if (elements_.empty())
            throw std::invalid_argument("set label must be nonempty");
        if (elements_.front() < 0)
            throw std::invalid_argument("set label elements must be non-negative");
    }

    SetLabel(std::initializer_list<int> elements)
        : SetLabel(std::vector<int>(elements)) {}

    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool is_singleton() const { return elements_.size() == 1; }

    friend auto operator<=>(const SetLabel&, const SetLabel&) = default;

private:
    std::vector<int> elements_;
};

/// A + B = {a + b : a in A, b in B}.
inline SetLabel sumset(const SetLabel& a, const SetLabel& b) {
    std::vector<int> sums;
    sums.reserve(a.elements().size() * b.elements().size());
    for (int x : a.elements())
        for (int y : b.elements())
            sums.push_back(x + y);
    return SetLabel(std::move(sums));
}

struct GroundSet {
    int max_element = 0; // X = {0, 1, ..., max_element}

    int size() const { return max_element + 1; }
};

/// Injective vertex labeling plus the induced edge sumset labels, aligned
/// with Graph::edges() order.
struct WiaslLabeling {
    std::vector<SetLabel> vertex_labels;
    std::vector<SetLabel> edge_labels;
    std::vector<VertexId> independent_set; // ascending
    GroundSet ground;
};

/// Labels V-I with the singletons {0}..{s-1} and I with disjoint consecutive
/// pairs {s+2k, s+2k+1}, both in ascending vertex order. Injectivity is
/// structural and the ground set ends at s + 2|I| - 1.
inline WiaslLabeling build_labeling(const Graph& g,
                                    std::span<const VertexId> independent_set) {
    if (!is_independent(g, independent_set))
        throw std::invalid_argument(
            "build_labeling requires an independent set: an edge with two "
            "non-singleton endpoints cannot satisfy the weak condition");

    const int n = g.vertex_count();
    std::vector<bool> in_set = detail::membership(g, independent_set);
    const int set_size = static_cast<int>(std::count(in_set.begin(), in_set.end(), true));
    const int singleton_count = n - set_size;

    WiaslLabeling lab;
    lab.ground.max_element = std::max(singleton_count + 2 * set_size - 1, 0);
    lab.vertex_labels.reserve(static_cast<std::size_t>(n));
    int next_singleton = 0;
    int next_pair = singleton_count;
    for (VertexId v = 0; v < n; ++v) {
        if (in_set[static_cast<std::size_t>(v)]) {
            lab.vertex_labels.push_back(SetLabel{next_pair, next_pair + 1});
            lab.independent_set.push_back(v);
            next_pair += 2;
        } else {
            lab.vertex_labels.push_back(SetLabel{next_singleton++});
        }
    }
    lab.edge_labels.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        lab.edge_labels.push_back(
            sumset(lab.vertex_labels[static_cast<std::size_t>(e.u)],
                   lab.vertex_labels[static_cast<std::size_t>(e.v)]));
    return lab;
}

struct VerificationReport {
    std::vector<std::pair<VertexId, VertexId>> duplicate_label_pairs; // injectivity
    EdgeSet wrong_sumset_edges;     // stored edge label != endpoint sumset
    EdgeSet weak_condition_failures; // |f+(uv)| not in {|f(u)|, |f(v)|}
    EdgeSet uncovered_edges;         // no singleton endpoint
    int mono_indexed_edge_count = 0;

    bool passed() const {
        return duplicate_label_pairs.empty() && wrong_sumset_edges.empty() &&
               weak_condition_failures.empty() && uncovered_edges.empty();
    }
};

/// Checks injectivity, edge sumsets, the weak condition and singleton edge
/// coverage, collecting every offender instead of stopping at the first.
inline VerificationReport verify_wiasl(const Graph& g, const WiaslLabeling& lab) {
    const int n = g.vertex_count();
    if (static_cast<int>(lab.vertex_labels.size()) != n)
        throw std::invalid_argument("labeling does not cover every vertex");
    if (lab.edge_labels.size() != g.edges().size())
        throw std::invalid_argument("labeling does not cover every edge");

    VerificationReport report;

    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return lab.vertex_labels[static_cast<std::size_t>(a)] <
               lab.vertex_labels[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (lab.vertex_labels[static_cast<std::size_t>(order[i])] ==
            lab.vertex_labels[static_cast<std::size_t>(order[i + 1])])
            report.duplicate_label_pairs.emplace_back(
                std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]));

    for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
        const Edge& e = g.edges()[idx];
        const SetLabel& fu = lab.vertex_labels[static_cast<std::size_t>(e.u)];
        const SetLabel& fv = lab.vertex_labels[static_cast<std::size_t>(e.v)];
        SetLabel induced = sumset(fu, fv);
        if (lab.edge_labels[idx] != induced)
            report.wrong_sumset_edges.push_back(e);
        if (induced.size() != fu.size() && induced.size() != fv.size())
            report.weak_condition_failures.push_back(e);
        if (!fu.is_singleton() && !fv.is_singleton())
            report.uncovered_edges.push_back(e);
        if (induced.is_singleton())
            ++report.mono_indexed_edge_count;
    }
    return report;
}

/// Edges whose stored label is a singleton.
inline int mono_indexed_count(const Graph& g, const WiaslLabeling& lab) {
    if (lab.edge_labels.size() != g.edges().size())
        throw std::invalid_argument("labeling does not cover every edge");
    return static_cast<int>(std::count_if(lab.edge_labels.begin(), lab.edge_labels.end(),
                                          [](const SetLabel& l) { return l.is_singleton(); }));
}

} // namespace sparing
