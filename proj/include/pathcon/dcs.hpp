#pragma once

#include "pathcon/enumerate.hpp"
#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/graph.hpp"

#include <optional>
#include <vector>

namespace pathcon {

struct Bipartition {
    VertexSet v1;
    VertexSet v2;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

/// (V_1, U, V_2): G[U] connected and G - U splits into exactly G[V_1], G[V_2].
struct TriPartition {
    VertexSet v1;
    VertexSet u;
    VertexSet v2;

    friend bool operator==(const TriPartition &, const TriPartition &) = default;
};

/// Terminal-size threshold below which 3-DCS goes through minimal connectors.
inline const Fraction & small_terminal_fraction()
{
    static const Fraction delta(92, 1000);
    return delta;
}

namespace detail {

inline void require_disjoint(const VertexSet & z1, const VertexSet & z2)
{
    if (z1.intersects(z2))
        throw Error(ErrorKind::TerminalsOverlap, to_string(z1 & z2));
}

inline void require_terminals(const VertexSet & z1, const VertexSet & z2)
{
    require_disjoint(z1, z2);
    if (z1.empty() || z2.empty())
        throw Error(ErrorKind::EmptyTerminal, "both terminal sets must be non-empty");
}

} // namespace detail

inline bool is_valid_bipartition(const Graph & g, const Bipartition & p, const VertexSet & z1, const VertexSet & z2)
{
    return !p.v1.empty() && !p.v2.empty() && !p.v1.intersects(p.v2) && (p.v1 | p.v2) == g.vertices() &&
           z1.subset_of(p.v1) && z2.subset_of(p.v2) && is_connected(g, p.v1) && is_connected(g, p.v2);
}

/// Checks every solution condition of a 3-DCS tri-partition for (z1, z2).
inline bool is_valid_tripartition(const Graph & g, const TriPartition & p, const VertexSet & z1, const VertexSet & z2)
{
    if (p.v1.empty() || p.u.empty() || p.v2.empty())
        return false;
    if (p.v1.intersects(p.u) || p.v1.intersects(p.v2) || p.u.intersects(p.v2))
        return false;
    if ((p.v1 | p.u | p.v2) != g.vertices())
        return false;
    if (!z1.subset_of(p.v1) || !z2.subset_of(p.v2))
        return false;
    if (!is_connected(g, p.v1) || !is_connected(g, p.u) || !is_connected(g, p.v2))
        return false;
    return !adjacent(g, p.v1, p.v2);
}

/// 2-DCS by enumerating connected V_1 containing z1 and avoiding z2, testing
/// the complement. Works on disconnected inputs as well.
inline std::optional<Bipartition> solve_2dcs(const Graph & g, const VertexSet & z1, const VertexSet & z2)
{
    detail::require_terminals(z1, z2);
    const VertexSet all = g.vertices();
    std::optional<Bipartition> found;
    grow_connected(
        g, all - z2, VertexSet::single(z1.min()),
        [](const VertexSet &, const VertexSet &) { return true; },
        [&](Vertex u, const VertexSet &, const VertexSet &) { return !z1.contains(u); },
        [&](const VertexSet & in, const VertexSet &) {
            if (!z1.subset_of(in))
                return false;
            VertexSet rest = all - in;
            if (is_connected(g, rest)) {
                found = Bipartition{in, rest};
                return true;
            }
            return false;
        });
    return found;
}

/// v is a Z-separator of G[within]: Z meets at least two components of
/// G[within - v].
inline bool is_separator(const Graph & g, const VertexSet & within, Vertex v, const VertexSet & z)
{
    VertexSet rest = within;
    rest.erase(v);
    VertexSet zr = z & rest;
    if (zr.empty())
        return false;
    return !zr.subset_of(component_of(g, rest, zr.min()));
}

/// S contains z, G[S] connected, and no proper subset of S is a z-connector.
inline bool is_minimal_connector(const Graph & g, const VertexSet & s, const VertexSet & z)
{
    if (!z.subset_of(s) || !is_connected(g, s))
        return false;
    for (Vertex v : s - z) {
        VertexSet rest = s;
        rest.erase(v);
        if (z.subset_of(component_of(g, rest, z.min())))
            return false;
    }
    return true;
}

/// Calls f(S) for every minimal z-connector S.
template <class F>
void for_each_minimal_connector(const Graph & g, const VertexSet & z, F && f)
{
    if (z.empty())
        throw Error(ErrorKind::EmptyTerminal, "connector terminals");
    grow_connected(
        g, g.vertices(), VertexSet::single(z.min()),
        [](const VertexSet &, const VertexSet &) { return true; },
        [&](Vertex u, const VertexSet &, const VertexSet &) { return !z.contains(u); },
        [&](const VertexSet & in, const VertexSet &) {
            if (z.subset_of(in) && is_minimal_connector(g, in, z))
                return f(in);
            return false;
        });
}

inline std::vector<VertexSet> enumerate_minimal_connectors(const Graph & g, const VertexSet & z)
{
    std::vector<VertexSet> out;
    for_each_minimal_connector(g, z, [&](const VertexSet & s) {
        out.push_back(s);
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// First non-terminal boundary vertex of an outer part that fails to separate
/// that part's terminals; side is 1 or 2.
struct Movable {
    int side = 0;
    Vertex v = -1;
};

inline Movable find_movable(const Graph & g, const TriPartition & sol, const VertexSet & z1, const VertexSet & z2)
{
    const VertexSet touching_u = neighborhood(g, sol.u);
    for (int side = 1; side <= 2; ++side) {
        const VertexSet & part = side == 1 ? sol.v1 : sol.v2;
        const VertexSet & z = side == 1 ? z1 : z2;
        for (Vertex v : (part - z) & touching_u)
            if (!is_separator(g, part, v, z))
                return {side, v};
    }
    return {};
}

} // namespace detail

/// Every non-terminal vertex of V_i adjacent to U is a Z_i-separator in G[V_i].
inline bool is_immovable(const Graph & g, const TriPartition & sol, const VertexSet & z1, const VertexSet & z2)
{
    if (!is_valid_tripartition(g, sol, z1, z2))
        throw Error(ErrorKind::InvalidSolution, "not a 3-DCS solution");
    return detail::find_movable(g, sol, z1, z2).side == 0;
}

/// Moves non-separating boundary vertices of V_1, V_2 (with the pieces they
/// cut away from the terminals) into U until none is left. U grows strictly
/// each round.
inline TriPartition make_immovable(const Graph & g, TriPartition sol, const VertexSet & z1, const VertexSet & z2)
{
    if (!is_valid_tripartition(g, sol, z1, z2))
        throw Error(ErrorKind::InvalidSolution, "not a 3-DCS solution");
    if (z1.empty() || z2.empty())
        throw Error(ErrorKind::EmptyTerminal, "immovability needs terminals on both sides");
    for (;;) {
        auto m = detail::find_movable(g, sol, z1, z2);
        if (m.side == 0)
            return sol;
        VertexSet & part = m.side == 1 ? sol.v1 : sol.v2;
        const VertexSet & z = m.side == 1 ? z1 : z2;
        VertexSet rest = part;
        rest.erase(m.v);
        VertexSet keep = component_of(g, rest, z.min());
        sol.u |= part - keep;
        part = keep;
    }
}

/// Minimal-connector route for 3-DCS; correct for any terminal sizes, fast
/// when |z1 u z2| is small relative to n. Assumes g connected.
inline std::optional<TriPartition> solve_small_3dcs(const Graph & g, const VertexSet & z1, const VertexSet & z2)
{
    detail::require_terminals(z1, z2);
    if (adjacent(g, z1, z2))
        return std::nullopt;

    Graph aux = g;
    aux.add_edge(z1.min(), z2.min());
    const VertexSet z = z1 | z2;
    const VertexSet all = g.vertices();

    std::optional<TriPartition> found;
    for_each_minimal_connector(aux, z, [&](const VertexSet & s) {
        auto parts = components(g, s);
        if (parts.size() != 2)
            return false;
        VertexSet s1 = parts[0], s2 = parts[1];
        if (!z1.subset_of(s1))
            std::swap(s1, s2);
        if (!z1.subset_of(s1) || !z2.subset_of(s2))
            return false;

        VertexSet v1 = s1, v2 = s2, u;
        int both = 0;
        for (const auto & c : components(g, all - s)) {
            auto nc = neighborhood(g, c);
            bool to1 = nc.intersects(s1), to2 = nc.intersects(s2);
            if (to1 && to2) {
                ++both;
                u = c;
            } else if (to1) {
                v1 |= c;
            } else if (to2) {
                v2 |= c;
            }
        }
        if (both != 1)
            return false;
        TriPartition sol{v1, u, v2};
        if (!is_valid_tripartition(g, sol, z1, z2))
            return false;
        found = sol;
        return true;
    });
    return found;
}

namespace detail {

/// Direct search over connected U avoiding the terminals.
inline std::optional<TriPartition> solve_3dcs_by_middle(const Graph & g, const VertexSet & z1, const VertexSet & z2)
{
    const VertexSet all = g.vertices();
    const VertexSet region = all - z1 - z2;
    std::optional<TriPartition> found;
    for (Vertex root : region) {
        VertexSet allowed = region - VertexSet::prefix(root);
        bool stop = grow_connected(
            g, allowed, VertexSet::single(root),
            [](const VertexSet &, const VertexSet &) { return true; },
            [](Vertex, const VertexSet &, const VertexSet &) { return true; },
            [&](const VertexSet & u, const VertexSet &) {
                VertexSet rest = all - u;
                VertexSet v1 = component_of(g, rest, z1.min());
                if (!z1.subset_of(v1) || v1.intersects(z2))
                    return false;
                VertexSet v2 = rest - v1;
                if (!z2.subset_of(v2) || !is_connected(g, v2))
                    return false;
                found = TriPartition{v1, u, v2};
                return true;
            });
        if (stop)
            break;
    }
    return found;
}

} // namespace detail

/// 3-DCS. Empty terminal sides are filled by trying every vertex. Small
/// terminal sets (|z1 u z2| <= 0.092 n) use the minimal-connector route,
/// larger ones enumerate the middle part directly.
inline std::optional<TriPartition> solve_3dcs(const Graph & g, const VertexSet & z1, const VertexSet & z2)
{
    detail::require_disjoint(z1, z2);
    const VertexSet all = g.vertices();
    if (z1.empty() || z2.empty()) {
        const bool both = z1.empty() && z2.empty();
        const VertexSet c1 = z1.empty() ? all - z2 : VertexSet::single(z1.min());
        for (Vertex a : c1) {
            VertexSet g1 = z1.empty() ? VertexSet::single(a) : z1;
            VertexSet c2 = z2.empty() ? all - g1 : VertexSet::single(z2.min());
            for (Vertex b : c2) {
                if (both && b < a)
                    continue;
                VertexSet g2 = z2.empty() ? VertexSet::single(b) : z2;
                if (adjacent(g, g1, g2))
                    continue;
                if (auto sol = solve_3dcs(g, g1, g2))
                    return sol;
            }
        }
        return std::nullopt;
    }
    if (small_terminal_fraction().admits((z1 | z2).size(), g.n()))
        return solve_small_3dcs(g, z1, z2);
    if (adjacent(g, z1, z2))
        return std::nullopt;
    return detail::solve_3dcs_by_middle(g, z1, z2);
}

/// A P_5-witness with singleton end bags, if one exists.
inline std::optional<WitnessStructure> p5_witness(const Graph & g)
{
    const int n = g.n();
    if (n < 5)
        return std::nullopt;
    const VertexSet all = g.vertices();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            const VertexSet & nx = g.neighbors(x);
            const VertexSet & ny = g.neighbors(y);
            if (nx.contains(y) || nx.intersects(ny) || nx.empty() || ny.empty())
                continue;
            VertexSet middle = all;
            middle.erase(x);
            middle.erase(y);
            if (!is_connected(g, middle))
                continue;
            auto sub = induced(g, middle);
            auto sol = solve_3dcs(sub.graph, sub.lower(nx), sub.lower(ny));
            if (!sol)
                continue;
            return WitnessStructure{{VertexSet::single(x), sub.lift(sol->v1), sub.lift(sol->u), sub.lift(sol->v2),
                                     VertexSet::single(y)}};
        }
    }
    return std::nullopt;
}

/// G contracts to P_5. Assumes g connected.
inline bool p5_contract(const Graph & g) { return p5_witness(g).has_value(); }

} // namespace pathcon
