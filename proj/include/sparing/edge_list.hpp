#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sparing/graph.hpp"

namespace sparing {

struct ParseError : std::runtime_error {
    int line_number;

    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
};

/// Text format: one edge per line as two whitespace-separated non-negative
/// integers. Lines starting with '#' are comments, blank lines are ignored.
/// Vertex count is max id + 1 unless the first significant line is "n <count>".
inline Graph parse_edge_list(std::string_view text) {
    struct Entry {
        Edge e;
        int line;
    };
    std::vector<Entry> entries;
    bool have_header = false;
    int header_n = 0;
    VertexId max_id = -1;
    bool first_significant = true;

    std::istringstream input{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#')
            continue;

        if (first_significant && first == "n") {
            long long count = -1;
            std::string rest;
            if (!(fields >> count) || fields >> rest || count < 0)
                throw ParseError(line_number, "malformed header, expected 'n <count>'");
            have_header = true;
            header_n = static_cast<int>(count);
            first_significant = false;
            continue;
        }
        first_significant = false;

        long long a = 0, b = 0;
        std::string rest;
        std::istringstream pair(line);
        if (!(pair >> a >> b) || pair >> rest)
            throw ParseError(line_number, "malformed edge, expected two integers");
        if (a < 0 || b < 0)
            throw ParseError(line_number, "negative vertex id");
        if (a == b)
            throw ParseError(line_number, "self-loop " + std::to_string(a) + " " +
                                              std::to_string(b));
        entries.push_back({Edge(static_cast<VertexId>(a), static_cast<VertexId>(b)),
                           line_number});
        max_id = std::max({max_id, static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }

    const int n = have_header ? header_n : max_id + 1;
    Graph g(n);
    for (const Entry& entry : entries) {
        if (entry.e.v >= n)
            throw ParseError(entry.line, "vertex " + std::to_string(entry.e.v) +
                                             " exceeds declared count " + std::to_string(n));
        if (g.has_edge(entry.e.u, entry.e.v))
            throw ParseError(entry.line, "duplicate edge " + std::to_string(entry.e.u) +
                                             " " + std::to_string(entry.e.v));
        g.add_edge(entry.e.u, entry.e.v);
    }
    return g;
}

/// Emits the header line so isolated vertices survive a round trip.
inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges())
        out << e.u << " " << e.v << "\n";
    return out.str();
}

} // namespace sparing
