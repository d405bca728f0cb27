#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparing {

using VertexId = int;

/// Undirected edge in canonical form: u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonically sorted, duplicate-free vector of edges.
using EdgeSet = std::vector<Edge>;

inline bool edge_set_contains(const EdgeSet& set, const Edge& e) {
    return std::binary_search(set.begin(), set.end(), e);
}

/// Insert keeping sorted order; returns false if already present.
inline bool edge_set_insert(EdgeSet& set, const Edge& e) {
    auto it = std::lower_bound(set.begin(), set.end(), e);
    if (it != set.end() && *it == e)
        return false;
    set.insert(it, e);
    return true;
}

inline EdgeSet edge_set_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Simple undirected graph over dense vertex ids [0, n).
/// Construction is add_edge based; values are treated as immutable afterwards,
/// so any number of readers may share one instance.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(VertexId a, VertexId b) {
        check_vertex(a);
        check_vertex(b);
        Edge e(a, b);
        if (!edge_set_insert(edges_, e))
            throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        insert_sorted(adj_[static_cast<std::size_t>(a)], b);
        insert_sorted(adj_[static_cast<std::size_t>(b)], a);
    }

    bool has_edge(VertexId a, VertexId b) const {
        check_vertex(a);
        check_vertex(b);
        if (a == b)
            return false;
        return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
    }

    int degree(VertexId v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    /// Open neighborhood N(v), ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    /// Closed neighborhood N(v) together with v itself, ascending.
    std::vector<VertexId> closed_neighborhood(VertexId v) const {
        std::vector<VertexId> out = neighbors(v);
        insert_sorted(out, v);
        return out;
    }

    /// All edges, canonical and ascending.
    const EdgeSet& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " not in [0," +
                                    std::to_string(vertex_count()) + ")");
    }

private:
    static void insert_sorted(std::vector<VertexId>& vec, VertexId v) {
        vec.insert(std::lower_bound(vec.begin(), vec.end(), v), v);
    }

    std::vector<std::vector<VertexId>> adj_;
    EdgeSet edges_;
};

namespace detail {

inline std::vector<bool> membership(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : vertices) {
        g.check_vertex(v);
        in[static_cast<std::size_t>(v)] = true;
    }
    return in;
}

} // namespace detail

/// Edges of g with both endpoints inside the given vertex set.
inline EdgeSet edges_within(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<bool> in = detail::membership(g, vertices);
    EdgeSet out;
    for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
            out.push_back(e);
    return out;
}

inline bool is_independent(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<bool> in = detail::membership(g, vertices);
    for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
            return false;
    return true;
}

/// Vertices of g not contained in the given set, ascending.
inline std::vector<VertexId> complement_vertices(const Graph& g,
                                                 std::span<const VertexId> vertices) {
    std::vector<bool> in = detail::membership(g, vertices);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

/// Component-wise BFS 2-coloring.
inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (VertexId start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1)
            continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::queue<VertexId> queue;
        queue.push(start);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (VertexId w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace sparing
