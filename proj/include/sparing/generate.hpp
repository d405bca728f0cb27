#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "sparing/graph.hpp"

namespace sparing {

inline Graph make_path(int n) {
    if (n < 1)
        throw std::invalid_argument("path requires n >= 1");
    Graph g(n);
    for (VertexId v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle requires n >= 3");
    Graph g(n);
    for (VertexId v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete requires n >= 1");
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("complete_bipartite requires m,n >= 1");
    Graph g(m + n);
    for (VertexId u = 0; u < m; ++u)
        for (VertexId v = 0; v < n; ++v)
            g.add_edge(u, m + v);
    return g;
}

/// G(n,p) with an explicit seed; the same arguments always yield the same
/// graph, on every platform (mt19937_64 stream, plain 53-bit threshold test).
inline Graph make_random(int n, double p, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random requires n >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random requires 0 <= p <= 1");
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p)
                g.add_edge(u, v);
        }
    return g;
}

/// Built-in 14-vertex, 26-edge demonstration graph (vertex a_k maps to id k-1).
/// Union of five stars centered at a3, a12, a7, a10, a14 plus six extra edges;
/// maximum degree 5, attained exactly at {a3, a5, a12}.
inline Graph make_figure1() {
    constexpr int kStarCount = 5;
    const VertexId centers[kStarCount] = {3, 12, 7, 10, 14};
    const std::vector<VertexId> leaves[kStarCount] = {
        {2, 4, 5, 6, 11}, {2, 6, 9, 11, 13}, {1, 2, 8, 11}, {8, 9, 11}, {4, 5, 13}};
    const std::pair<VertexId, VertexId> extra[6] = {{4, 5}, {5, 6},  {1, 2},
                                                    {1, 8}, {8, 9}, {5, 13}};
    Graph g(14);
    for (int i = 0; i < kStarCount; ++i)
        for (VertexId leaf : leaves[i])
            g.add_edge(centers[i] - 1, leaf - 1);
    for (auto [a, b] : extra)
        g.add_edge(a - 1, b - 1);
    return g;
}

} // namespace sparing
