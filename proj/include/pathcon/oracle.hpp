#pragma once

// Brute-force referees. Only graph-core is used here so that the solver's
// enumeration, table and DCS code never checks itself.

#include "pathcon/error.hpp"
#include "pathcon/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace pathcon {

namespace oracle_detail {

/// Path order of the parts (which partition a connected vertex set into
/// connected pieces), or nullopt when the contraction is not a path.
inline std::optional<std::vector<VertexSet>> as_path(const Graph & g, const std::vector<VertexSet> & parts)
{
    const std::size_t k = parts.size();
    std::vector<int> deg(k, 0);
    std::vector<std::size_t> first(k, k), second(k, k);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const VertexSet n = neighborhood(g, parts[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!n.intersects(parts[j]))
                continue;
            if (++deg[i] > 2 || ++deg[j] > 2)
                return std::nullopt;
            (first[i] == k ? first[i] : second[i]) = j;
            (first[j] == k ? first[j] : second[j]) = i;
            ++edges;
        }
    }
    if (edges + 1 != k)
        return std::nullopt;
    std::size_t cur = 0;
    while (deg[cur] > 1)
        ++cur;
    std::vector<VertexSet> out;
    std::size_t prev = k;
    for (;;) {
        out.push_back(parts[cur]);
        std::size_t next = first[cur] != prev ? first[cur] : second[cur];
        if (next == k || out.size() == k)
            break;
        prev = cur;
        cur = next;
    }
    return out;
}

/// Calls f(witness) for the path contraction obtained from every two-coloring
/// of `universe` whose first vertex has colour 0.
template <class F>
void for_each_coloring_path(const Graph & g, const VertexSet & universe, F && f)
{
    const auto members = universe.to_vector();
    const std::size_t m = members.size();
    const std::uint64_t limit = std::uint64_t{1} << (m - 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet red;
        for (std::size_t i = 1; i < m; ++i)
            if (mask >> (i - 1) & 1)
                red.insert(members[i]);
        auto parts = components(g, universe - red);
        auto more = components(g, red);
        parts.insert(parts.end(), more.begin(), more.end());
        if (auto path = as_path(g, parts))
            f(WitnessStructure{std::move(*path)});
    }
}

} // namespace oracle_detail

struct OracleResult {
    int t = 0;
    WitnessStructure witness;
};

/// Longest path contraction over all two-colorings.
inline OracleResult oracle_path_contraction(const Graph & g)
{
    if (!is_connected(g))
        throw Error(ErrorKind::Disconnected, "input graph is not connected");
    if (g.n() > 30)
        throw Error(ErrorKind::CapacityExceeded, "oracle limited to 30 vertices");
    OracleResult best;
    oracle_detail::for_each_coloring_path(g, g.vertices(), [&](WitnessStructure w) {
        if (w.t() > best.t) {
            best.t = w.t();
            best.witness = std::move(w);
        }
    });
    return best;
}

/// Every witness structure of g, each orientation separately.
template <class F>
void for_each_witness(const Graph & g, F && f)
{
    oracle_detail::for_each_coloring_path(g, g.vertices(), [&](const WitnessStructure & w) {
        f(w);
        if (w.t() > 1)
            f(w.reversed());
    });
}

inline std::vector<WitnessStructure> all_witnesses(const Graph & g)
{
    std::vector<WitnessStructure> out;
    for_each_witness(g, [&](const WitnessStructure & w) { out.push_back(w); });
    return out;
}

/// Largest q such that G[s] contracts to P_q with every vertex of s that has
/// a neighbor outside s in the last bag.
inline int oracle_nice_solution(const Graph & g, const VertexSet & s)
{
    if (s.empty() || !is_connected(g, s))
        throw Error(ErrorKind::NotConnected, "G[s] must be non-empty and connected");
    const VertexSet phi = boundary(g, s);
    int best = 0;
    oracle_detail::for_each_coloring_path(g, s, [&](const WitnessStructure & w) {
        if (phi.subset_of(w.parts.back()) || phi.subset_of(w.parts.front()))
            best = std::max(best, w.t());
    });
    return best;
}

/// Every ordered partition of V into two connected parts.
inline std::vector<std::array<VertexSet, 2>> all_connected_bipartitions(const Graph & g)
{
    std::vector<std::array<VertexSet, 2>> out;
    const int n = g.n();
    const VertexSet all = g.vertices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet a;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                a.insert(v);
        if (is_connected(g, a) && is_connected(g, all - a))
            out.push_back({a, all - a});
    }
    return out;
}

/// Every ordered partition (V1, U, V2) of V into connected parts with no edge
/// between V1 and V2.
inline std::vector<std::array<VertexSet, 3>> all_connected_tripartitions(const Graph & g)
{
    std::vector<std::array<VertexSet, 3>> out;
    const int n = g.n();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::array<VertexSet, 3> p;
        std::uint64_t c = code;
        for (int v = 0; v < n; ++v, c /= 3)
            p[c % 3].insert(v);
        if (p[0].empty() || p[1].empty() || p[2].empty())
            continue;
        if (adjacent(g, p[0], p[2]))
            continue;
        if (is_connected(g, p[0]) && is_connected(g, p[1]) && is_connected(g, p[2]))
            out.push_back(p);
    }
    return out;
}

/// Whether some listed partition puts z1 in its first part and z2 in its
/// last part.
template <std::size_t K>
bool dcs_solvable(const std::vector<std::array<VertexSet, K>> & solutions, const VertexSet & z1, const VertexSet & z2)
{
    return std::any_of(solutions.begin(), solutions.end(), [&](const auto & p) {
        return z1.subset_of(p.front()) && z2.subset_of(p.back());
    });
}

/// Exhaustive 2-DCS (parts = 2) or 3-DCS (parts = 3).
inline bool oracle_dcs(const Graph & g, const VertexSet & z1, const VertexSet & z2, int parts)
{
    if (z1.intersects(z2))
        throw Error(ErrorKind::TerminalsOverlap, "terminal sets intersect");
    if (parts == 2)
        return dcs_solvable(all_connected_bipartitions(g), z1, z2);
    if (parts == 3)
        return dcs_solvable(all_connected_tripartitions(g), z1, z2);
    throw Error(ErrorKind::DomainError, "parts must be 2 or 3");
}

/// Streams every labeled connected graph on n vertices.
template <class F>
void for_each_connected_graph(int n, F && f)
{
    if (n > 7)
        throw Error(ErrorKind::CapacityExceeded, "labeled enumeration limited to 7 vertices");
    if (n < 2)
        throw Error(ErrorKind::DomainError, "need at least 2 vertices");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        if (is_connected(g))
            f(g);
    }
}

inline std::vector<Graph> connected_graphs(int n)
{
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph & g) { out.push_back(g); });
    return out;
}

namespace oracle_detail {

/// Upper-triangle adjacency bits of g under the vertex order `perm`.
inline std::uint64_t encode(const Graph & g, const std::vector<Vertex> & perm)
{
    std::uint64_t code = 0;
    const std::size_t n = perm.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            code = code << 1 | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
    return code;
}

/// Labeling-independent code: refine colours by neighbour-colour multisets,
/// then take the largest encoding over orders that respect the colour cells.
inline std::uint64_t canonical_code(const Graph & g)
{
    const int n = g.n();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        colour[static_cast<std::size_t>(v)] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto & s = sig[static_cast<std::size_t>(v)];
            for (Vertex u : g.neighbors(v))
                s.push_back(colour[static_cast<std::size_t>(u)]);
            std::sort(s.begin(), s.end());
            s.insert(s.begin(), colour[static_cast<std::size_t>(v)]);
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
        const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
        colour = std::move(next);
        if (stable)
            break;
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
    });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && colour[static_cast<std::size_t>(order[j])] == colour[static_cast<std::size_t>(order[i])])
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = 0;
    auto rec = [&](auto && self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            best = std::max(best, encode(g, order));
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        do
            self(self, cell + 1);
        while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                     order.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    rec(rec, 0);
    return best;
}

} // namespace oracle_detail

/// One representative per isomorphism class of connected graphs on n
/// vertices (2 <= n <= 8), built by adding a vertex to every class on n - 1
/// vertices in all possible ways.
inline std::vector<Graph> connected_graph_classes(int n)
{
    if (n < 2)
        throw Error(ErrorKind::DomainError, "need at least 2 vertices");
    if (n > 8)
        throw Error(ErrorKind::CapacityExceeded, "class enumeration limited to 8 vertices");
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto & base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                Graph h(k);
                for (auto [u, v] : base.edges())
                    h.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1)
                        h.add_edge(v, k - 1);
                if (seen.insert(oracle_detail::canonical_code(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto & h : level)
        if (is_connected(h))
            out.push_back(std::move(h));
    return out;
}

} // namespace pathcon
