#pragma once

#include "pathcon/error.hpp"
#include "pathcon/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathcon {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n))
    {
        if (n < 1 || n > VertexSet::capacity)
            throw Error(ErrorKind::CapacityExceeded,
                        "vertex count " + std::to_string(n) + " outside [1, " + std::to_string(VertexSet::capacity) + "]");
    }

    Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::prefix(n_); }
    const VertexSet & neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    int edge_count() const
    {
        int m = 0;
        for (const auto & a : adj_)
            m += a.size();
        return m / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    /// Duplicate edges collapse. Self-loops and out-of-range endpoints throw.
    void add_edge(Vertex u, Vertex v)
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error(ErrorKind::Parse, "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        if (u == v)
            throw Error(ErrorKind::Parse, "self-loop at " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// N(S): vertices outside S adjacent to some member of S.
inline VertexSet neighborhood(const Graph & g, const VertexSet & s)
{
    VertexSet out;
    for (Vertex v : s)
        out |= g.neighbors(v);
    return out - s;
}

/// N[S] = S u N(S).
inline VertexSet closed_neighborhood(const Graph & g, const VertexSet & s) { return s | neighborhood(g, s); }

/// Members of S with a neighbor outside S.
inline VertexSet boundary(const Graph & g, const VertexSet & s)
{
    VertexSet out;
    for (Vertex v : s)
        if (!g.neighbors(v).subset_of(s))
            out.insert(v);
    return out;
}

/// Vertices of `within` reachable from `seed` inside G[within].
inline VertexSet reach(const Graph & g, const VertexSet & within, const VertexSet & seed)
{
    VertexSet seen = seed & within;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighbors(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline VertexSet component_of(const Graph & g, const VertexSet & within, Vertex v)
{
    return reach(g, within, VertexSet::single(v));
}

/// Empty sets count as connected.
inline bool is_connected(const Graph & g, const VertexSet & s)
{
    if (s.empty())
        return true;
    return component_of(g, s, s.min()) == s;
}

inline bool is_connected(const Graph & g) { return is_connected(g, g.vertices()); }

/// Components of G[S], ordered by minimum member.
inline std::vector<VertexSet> components(const Graph & g, VertexSet s)
{
    std::vector<VertexSet> out;
    while (!s.empty()) {
        auto c = component_of(g, s, s.min());
        out.push_back(c);
        s -= c;
    }
    return out;
}

inline int component_count(const Graph & g, VertexSet s)
{
    int c = 0;
    while (!s.empty()) {
        s -= component_of(g, s, s.min());
        ++c;
    }
    return c;
}

inline bool adjacent(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    return neighborhood(g, a).intersects(b);
}

/// G/parts: vertex i of the result is parts[i].
inline Graph quotient(const Graph & g, const std::vector<VertexSet> & parts)
{
    if (parts.empty())
        throw Error(ErrorKind::NotAPartition, "no parts");
    VertexSet seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty() || parts[i].intersects(seen) || !parts[i].subset_of(g.vertices()))
            throw Error(ErrorKind::NotAPartition, "part " + std::to_string(i) + " is empty, overlaps, or out of range");
        seen |= parts[i];
    }
    if (seen != g.vertices())
        throw Error(ErrorKind::NotAPartition, "parts miss vertices");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!is_connected(g, parts[i]))
            throw Error(ErrorKind::PartNotConnected, "part " + std::to_string(i));

    Graph h(static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto n = neighborhood(g, parts[i]);
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (n.intersects(parts[j]))
                h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return h;
}

/// If g is a path, its vertices from one end to the other (starting at the
/// smaller-indexed end); otherwise nullopt.
inline std::optional<std::vector<Vertex>> path_order(const Graph & g)
{
    const int n = g.n();
    if (g.edge_count() != n - 1)
        return std::nullopt;
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d > 2)
            return std::nullopt;
        if (d <= 1 && start < 0)
            start = v;
    }
    if (start < 0)
        return std::nullopt;
    std::vector<Vertex> order{start};
    VertexSet used = VertexSet::single(start);
    while (static_cast<int>(order.size()) < n) {
        auto next = g.neighbors(order.back()) - used;
        if (next.empty())
            return std::nullopt;
        order.push_back(next.min());
        used.insert(next.min());
    }
    return order;
}

/// t if g is isomorphic to P_t.
inline std::optional<int> as_path_length(const Graph & g)
{
    if (path_order(g))
        return g.n();
    return std::nullopt;
}

/// Ordered partition (W_1, ..., W_t) certifying contraction to P_t.
struct WitnessStructure {
    std::vector<VertexSet> parts;

    int t() const { return static_cast<int>(parts.size()); }

    /// Union of W_1, W_3, ...
    VertexSet odd_union() const
    {
        VertexSet s;
        for (std::size_t i = 0; i < parts.size(); i += 2)
            s |= parts[i];
        return s;
    }

    /// Union of W_2, W_4, ...
    VertexSet even_union() const
    {
        VertexSet s;
        for (std::size_t i = 1; i < parts.size(); i += 2)
            s |= parts[i];
        return s;
    }

    WitnessStructure reversed() const { return {{parts.rbegin(), parts.rend()}}; }

    friend bool operator==(const WitnessStructure &, const WitnessStructure &) = default;
};

enum class WitnessDefect {
    None,
    Empty,
    EmptyPart,
    Overlap,
    NotCovering,
    PartNotConnected,
    MissingAdjacency,
    ExtraAdjacency,
};

struct WitnessCheck {
    WitnessDefect defect = WitnessDefect::None;
    int part = -1;

    bool ok() const { return defect == WitnessDefect::None; }
    explicit operator bool() const { return ok(); }
};

/// Checks w against every witness-structure invariant over the vertex set
/// `universe` (normally V(g); a subset when certifying G[S]).
inline WitnessCheck check_witness(const Graph & g, const WitnessStructure & w, const VertexSet & universe)
{
    if (w.parts.empty())
        return {WitnessDefect::Empty, -1};
    VertexSet seen;
    for (int i = 0; i < w.t(); ++i) {
        const auto & p = w.parts[static_cast<std::size_t>(i)];
        if (p.empty())
            return {WitnessDefect::EmptyPart, i};
        if (p.intersects(seen))
            return {WitnessDefect::Overlap, i};
        seen |= p;
    }
    if (seen != universe)
        return {WitnessDefect::NotCovering, -1};
    for (int i = 0; i < w.t(); ++i)
        if (!is_connected(g, w.parts[static_cast<std::size_t>(i)]))
            return {WitnessDefect::PartNotConnected, i};
    for (int i = 0; i < w.t(); ++i) {
        auto n = neighborhood(g, w.parts[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < w.t(); ++j) {
            bool adj = n.intersects(w.parts[static_cast<std::size_t>(j)]);
            if (j == i + 1 && !adj)
                return {WitnessDefect::MissingAdjacency, i};
            if (j > i + 1 && adj)
                return {WitnessDefect::ExtraAdjacency, i};
        }
    }
    return {};
}

inline WitnessCheck check_witness(const Graph & g, const WitnessStructure & w)
{
    return check_witness(g, w, g.vertices());
}

inline bool verify_witness(const Graph & g, const WitnessStructure & w) { return check_witness(g, w).ok(); }

/// G[S] relabelled onto 0..|S|-1, with the map back to parent labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet lift(const VertexSet & local) const
    {
        VertexSet out;
        for (Vertex v : local)
            out.insert(to_parent[static_cast<std::size_t>(v)]);
        return out;
    }

    VertexSet lower(const VertexSet & parent) const
    {
        VertexSet out;
        for (std::size_t i = 0; i < to_parent.size(); ++i)
            if (parent.contains(to_parent[i]))
                out.insert(static_cast<Vertex>(i));
        return out;
    }
};

inline InducedSubgraph induced(const Graph & g, const VertexSet & s)
{
    InducedSubgraph sub{Graph(s.size()), s.to_vector()};
    std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        for (Vertex u : g.neighbors(sub.to_parent[i]) & s)
            if (local[static_cast<std::size_t>(u)] > static_cast<Vertex>(i))
                sub.graph.add_edge(static_cast<Vertex>(i), local[static_cast<std::size_t>(u)]);
    return sub;
}

inline std::string to_string(const VertexSet & s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace pathcon
