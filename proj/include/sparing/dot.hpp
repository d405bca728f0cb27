#pragma once

#include <span>
#include <sstream>
#include <string>

#include "sparing/graph.hpp"

namespace sparing {

/// Graphviz rendering: vertices of the independent set are drawn as double
/// circles, mono-indexed edges bold.
inline std::string to_dot(const Graph& g, std::span<const VertexId> independent_set,
                          const EdgeSet& mono_edges) {
    std::vector<bool> in_set = detail::membership(g, independent_set);
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (in_set[static_cast<std::size_t>(v)])
            out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (edge_set_contains(mono_edges, e))
            out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g) { return to_dot(g, {}, {}); }

} // namespace sparing
