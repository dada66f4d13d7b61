#pragma once

#include "pathcon/graph.hpp"

#include <random>
#include <vector>

namespace pathcon::testing {

inline Graph path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

// centre 0, leaves 1..m
inline Graph star(int m)
{
    Graph g(m + 1);
    for (int i = 1; i <= m; ++i)
        g.add_edge(0, i);
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64 & rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

// Rejection sampling; p is raised slightly after repeated failures so
// sparse requests still terminate quickly.
inline Graph random_connected_graph(int n, double p, std::mt19937_64 & rng)
{
    for (int tries = 0;; ++tries) {
        Graph g = random_graph(n, tries > 200 ? p + 0.1 : p, rng);
        if (is_connected(g))
            return g;
    }
}

inline Graph relabel(const Graph & g, const std::vector<Vertex> & perm)
{
    Graph h(g.n());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

inline VertexSet set_of_mask(std::uint64_t mask, int n)
{
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            s.insert(v);
    return s;
}

inline std::vector<VertexSet> power_set(int n)
{
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        out.push_back(set_of_mask(m, n));
    return out;
}

} // namespace pathcon::testing
