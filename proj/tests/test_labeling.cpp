#include <random>
#include <set>

#include "catch2/catch_amalgamated.hpp"

#include "sparing/exact.hpp"
#include "sparing/generate.hpp"
#include "sparing/greedy.hpp"
#include "sparing/labeling.hpp"
#include "test_support.hpp"

using namespace sparing;

namespace {
constexpr VertexId a(int k) { return k - 1; }
} // namespace

TEST_CASE("sumset arithmetic") {
    CHECK(sumset({1, 2}, {3}) == SetLabel{4, 5});
    CHECK(sumset({0}, {0, 3, 7}) == SetLabel{0, 3, 7});
    CHECK(sumset({1, 2}, {1, 3}) == SetLabel{2, 3, 4, 5});
    CHECK(sumset({0, 2}, {0, 2}) == SetLabel{0, 2, 4}); // collisions collapse

    CHECK_THROWS_AS(SetLabel(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(SetLabel({-1, 2}), std::invalid_argument);
    CHECK(SetLabel({3, 1, 3, 2}).elements() == std::vector<int>{1, 2, 3});
}

TEST_CASE("sumset properties") {
    std::mt19937_64 rng(99);
    auto random_label = [&] {
        int size = 1 + static_cast<int>(rng() % 6);
        std::vector<int> elems;
        for (int i = 0; i < size; ++i)
            elems.push_back(static_cast<int>(rng() % 50));
        return SetLabel(std::move(elems));
    };
    for (int trial = 0; trial < 300; ++trial) {
        SetLabel x = random_label(), y = random_label(), z = random_label();
        SetLabel xy = sumset(x, y);
        CHECK(xy == sumset(y, x));
        CHECK(sumset(xy, z) == sumset(x, sumset(y, z)));
        CHECK(xy.size() >= std::max(x.size(), y.size()));
        CHECK(xy.size() <= x.size() * y.size());
        int shift = static_cast<int>(rng() % 50);
        CHECK(sumset(x, SetLabel{shift}).size() == x.size()); // absorption
    }
}

TEST_CASE("build_labeling on the smallest graphs") {
    Graph k2 = make_path(2);
    std::vector<VertexId> i0 = {0};
    WiaslLabeling lab = build_labeling(k2, i0);
    CHECK(lab.vertex_labels[0] == SetLabel{1, 2});
    CHECK(lab.vertex_labels[1] == SetLabel{0});
    CHECK(lab.edge_labels[0] == SetLabel{1, 2});
    CHECK(mono_indexed_count(k2, lab) == 0);
    CHECK(lab.ground.max_element == 2);

    Graph k3 = make_complete(3);
    WiaslLabeling lab3 = build_labeling(k3, i0);
    CHECK(lab3.vertex_labels[0] == SetLabel{2, 3});
    CHECK(lab3.vertex_labels[1] == SetLabel{0});
    CHECK(lab3.vertex_labels[2] == SetLabel{1});
    // edge 1-2 is the single mono edge, labeled {1}
    CHECK(lab3.edge_labels[2] == SetLabel{1});
    CHECK(mono_indexed_count(k3, lab3) == 1);
}

TEST_CASE("build_labeling realizes the figure1 trace count") {
    Graph fig = make_figure1();
    std::vector<VertexId> greedy_set = {a(3), a(7), a(10), a(12), a(14)};
    WiaslLabeling lab = build_labeling(fig, greedy_set);

    VerificationReport report = verify_wiasl(fig, lab);
    CHECK(report.passed());
    CHECK(report.mono_indexed_edge_count == 6);
    CHECK(mono_indexed_count(fig, lab) == 6);

    EdgeSet mono;
    for (std::size_t idx = 0; idx < fig.edges().size(); ++idx)
        if (lab.edge_labels[idx].is_singleton())
            mono.push_back(fig.edges()[idx]);
    EdgeSet expected = {Edge(a(4), a(5)), Edge(a(5), a(6)), Edge(a(1), a(2)),
                        Edge(a(1), a(8)), Edge(a(8), a(9)), Edge(a(5), a(13))};
    std::sort(expected.begin(), expected.end());
    CHECK(mono == expected);
}

TEST_CASE("build_labeling rejects dependent sets") {
    Graph k3 = make_complete(3);
    std::vector<VertexId> dependent = {0, 1};
    CHECK_THROWS_AS(build_labeling(k3, dependent), std::invalid_argument);
}

TEST_CASE("verify_wiasl reports every failure kind") {
    Graph k2 = make_path(2);
    WiaslLabeling bad;
    bad.vertex_labels = {SetLabel{1, 2}, SetLabel{1, 3}};
    bad.edge_labels = {sumset(SetLabel{1, 2}, SetLabel{1, 3})};
    VerificationReport report = verify_wiasl(k2, bad);
    CHECK_FALSE(report.passed());
    CHECK(report.uncovered_edges == EdgeSet{Edge(0, 1)});           // (d)
    CHECK(report.weak_condition_failures == EdgeSet{Edge(0, 1)});   // (c): 4 not in {2,2}
    CHECK(report.wrong_sumset_edges.empty());                       // (b) holds
    CHECK(report.duplicate_label_pairs.empty());

    SECTION("stored edge label disagreeing with the sumset") {
        bad.vertex_labels = {SetLabel{0}, SetLabel{1}};
        bad.edge_labels = {SetLabel{7}};
        VerificationReport r2 = verify_wiasl(k2, bad);
        CHECK(r2.wrong_sumset_edges == EdgeSet{Edge(0, 1)});
        CHECK(r2.weak_condition_failures.empty());
        CHECK(r2.mono_indexed_edge_count == 1); // induced {1} is a singleton
    }

    SECTION("injectivity violations are enumerated") {
        bad.vertex_labels = {SetLabel{5}, SetLabel{5}};
        bad.edge_labels = {SetLabel{10}};
        VerificationReport r3 = verify_wiasl(k2, bad);
        CHECK(r3.duplicate_label_pairs ==
              std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    }

    SECTION("structural coverage is a precondition") {
        WiaslLabeling short_lab;
        short_lab.vertex_labels = {SetLabel{0}};
        short_lab.edge_labels = {SetLabel{0}};
        CHECK_THROWS_AS(verify_wiasl(k2, short_lab), std::invalid_argument);
    }
}

TEST_CASE("labelings built from any independent set verify cleanly") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        double p = 0.05 + 0.7 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        Graph g = test_support::random_graph(rng, n, p);
        std::vector<VertexId> set = test_support::random_maximal_independent_set(g, rng);

        WiaslLabeling lab = build_labeling(g, set);
        VerificationReport report = verify_wiasl(g, lab);
        CHECK(report.passed());

        int outside_edges =
            static_cast<int>(edges_within(g, complement_vertices(g, set)).size());
        CHECK(mono_indexed_count(g, lab) == outside_edges);
        CHECK(report.mono_indexed_edge_count == outside_edges);

        // injectivity and the singleton/pair split
        std::set<SetLabel> distinct;
        for (VertexId v = 0; v < n; ++v) {
            const SetLabel& label = lab.vertex_labels[static_cast<std::size_t>(v)];
            distinct.insert(label);
            bool in_set = std::binary_search(set.begin(), set.end(), v);
            CHECK(label.is_singleton() == !in_set);
            CHECK(label.elements().back() <= lab.ground.max_element);
        }
        CHECK(static_cast<int>(distinct.size()) == n);

        // an edge is mono-indexed exactly when both endpoints are
        for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
            const Edge& e = g.edges()[idx];
            bool both = lab.vertex_labels[static_cast<std::size_t>(e.u)].is_singleton() &&
                        lab.vertex_labels[static_cast<std::size_t>(e.v)].is_singleton();
            CHECK(lab.edge_labels[idx].is_singleton() == both);
        }
    }
}

TEST_CASE("labeling a bipartite graph from one color class has no mono edges") {
    Graph k34 = make_complete_bipartite(3, 4);
    std::vector<VertexId> left = {0, 1, 2};
    WiaslLabeling lab = build_labeling(k34, left);
    CHECK(verify_wiasl(k34, lab).passed());
    CHECK(mono_indexed_count(k34, lab) == 0);
}

TEST_CASE("exact optimum is realized by an explicit labeling") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = test_support::random_graph(rng, n, 0.3);
        SparingResult exact = sparing_exact(g);
        WiaslLabeling lab = build_labeling(g, exact.independent_set);
        CHECK(verify_wiasl(g, lab).passed());
        CHECK(mono_indexed_count(g, lab) == exact.phi);
    }
}
