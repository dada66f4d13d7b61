#pragma once

#include "pathcon/error.hpp"
#include "pathcon/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pathcon {

/// Text format: "n m", then m lines "u v". Lines starting with '#' and blank
/// lines are skipped.
inline Graph read_graph(std::istream & in)
{
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string & out) {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string & what) -> Graph {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
    };

    std::string text;
    if (!next_line(text))
        fail("missing \"n m\" header");
    long long n = 0, m = 0;
    {
        std::istringstream ss(text);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra) || m < 0)
            fail("expected \"n m\"");
    }
    if (n < 1 || n > VertexSet::capacity)
        throw Error(ErrorKind::CapacityExceeded, "vertex count " + std::to_string(n) + " outside [1, 128]");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(text))
            fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream ss(text);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            fail("expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("vertex index out of range");
        if (u == v)
            fail("self-loop at " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line(text))
        fail("more than " + std::to_string(m) + " edge lines");
    return g;
}

inline Graph parse_graph(const std::string & text)
{
    std::istringstream in(text);
    return read_graph(in);
}

inline Graph read_graph_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream & out, const Graph & g)
{
    const auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

} // namespace pathcon
