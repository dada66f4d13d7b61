#pragma once

#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/graph.hpp"
#include "pathcon/vertex_set.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pathcon {

/// Frontier branching over the connected sets that contain `seed` and lie
/// inside `allowed`. The frontier always holds the allowed, undecided
/// neighbors of the current set; its minimum is branched on (include, then
/// exclude). Every connected superset of `seed` inside `allowed` reaches
/// exactly one leaf, and at that leaf `excluded` equals N(set) & allowed.
///
///   include_ok(in_after, excluded)       -> false prunes the include branch
///   exclude_ok(u, in, excluded_after)    -> false prunes the exclude branch
///   visit(in, excluded)                  -> true stops the whole search
///
/// Returns true if a visit requested a stop.
template <class IncludeOk, class ExcludeOk, class Visit>
bool grow_connected(const Graph & g, const VertexSet & allowed, const VertexSet & seed,
                    IncludeOk && include_ok, ExcludeOk && exclude_ok, Visit && visit)
{
    struct Rec {
        const Graph & g;
        const VertexSet & allowed;
        IncludeOk & include_ok;
        ExcludeOk & exclude_ok;
        Visit & visit;

        bool operator()(const VertexSet & in, const VertexSet & frontier, const VertexSet & excluded)
        {
            if (frontier.empty())
                return visit(in, excluded);
            Vertex u = frontier.min();
            VertexSet with_u = in;
            with_u.insert(u);
            if (include_ok(with_u, excluded)) {
                VertexSet next = (frontier | (g.neighbors(u) & allowed)) - with_u - excluded;
                if ((*this)(with_u, next, excluded))
                    return true;
            }
            VertexSet ex = excluded;
            ex.insert(u);
            VertexSet rest = frontier;
            rest.erase(u);
            if (exclude_ok(u, in, ex))
                return (*this)(in, rest, ex);
            return false;
        }
    };
    Rec rec{g, allowed, include_ok, exclude_ok, visit};
    VertexSet frontier = neighborhood(g, seed) & allowed;
    return rec(seed, frontier, VertexSet{});
}

/// Calls f(S) for every non-empty connected S with |N[S]| <= rho * n, in
/// discovery order (grouped by minimum member).
template <class F>
void for_each_small_connected(const Graph & g, const Fraction & rho, F && f)
{
    const int n = g.n();
    for (Vertex root = 0; root < n; ++root) {
        VertexSet seed = VertexSet::single(root);
        if (!rho.admits(closed_neighborhood(g, seed).size(), n))
            continue;
        VertexSet allowed = g.vertices() - VertexSet::prefix(root);
        grow_connected(
            g, allowed, seed,
            [&](const VertexSet & in, const VertexSet &) { return rho.admits(closed_neighborhood(g, in).size(), n); },
            [](Vertex, const VertexSet &, const VertexSet &) { return true; },
            [&](const VertexSet & in, const VertexSet &) {
                f(in);
                return false;
            });
    }
}

/// Orders by size, then by canonical encoding.
inline bool size_then_encoding(const VertexSet & a, const VertexSet & b)
{
    int sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a < b;
}

/// All non-empty connected S with |N[S]| <= rho * n, ascending by |S| with
/// ties broken by encoding.
inline std::vector<VertexSet> enumerate_small_connected(const Graph & g, const Fraction & rho)
{
    std::vector<VertexSet> out;
    for_each_small_connected(g, rho, [&](const VertexSet & s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), size_then_encoding);
    return out;
}

/// Extender request: sets A with |A| = a and |N_{G-S}(A)| = b around base S.
struct ExtenderQuery {
    VertexSet base;
    int a = 1;
    int b = 0;
};

/// Calls f(A, b) for every A inside V - S with G-S[A] connected, N(S) within A,
/// and |S| + |A| + |N_{G-S}(A)| <= budget, where b = |N_{G-S}(A)|.
template <class F>
void for_each_extender(const Graph & g, const VertexSet & base, int budget, F && f)
{
    const VertexSet required = neighborhood(g, base);
    if (required.empty())
        return;
    const VertexSet allowed = g.vertices() - base;
    const int base_size = base.size();
    const int need = required.size();
    if (base_size + need > budget)
        return;
    grow_connected(
        g, allowed, VertexSet::single(required.min()),
        [&](const VertexSet & in, const VertexSet & excluded) {
            return base_size + (in | required).size() + excluded.size() <= budget;
        },
        [&](Vertex u, const VertexSet & in, const VertexSet & excluded) {
            return !required.contains(u) && base_size + (in | required).size() + excluded.size() <= budget;
        },
        [&](const VertexSet & in, const VertexSet & excluded) {
            if (required.subset_of(in))
                f(in, excluded.size());
            return false;
        });
}

/// Exactly the sets A of the query: A inside V - S, G-S[A] connected,
/// N(S) within A, |A| = a, |N_{G-S}(A)| = b. Sorted by encoding.
inline std::vector<VertexSet> enumerate_extenders(const Graph & g, const ExtenderQuery & q)
{
    std::vector<VertexSet> out;
    const VertexSet required = neighborhood(g, q.base);
    if (required.empty() || q.a < required.size() || q.b < 0)
        return out;
    const VertexSet allowed = g.vertices() - q.base;
    grow_connected(
        g, allowed, VertexSet::single(required.min()),
        [&](const VertexSet & in, const VertexSet &) { return (in | required).size() <= q.a; },
        [&](Vertex u, const VertexSet &, const VertexSet & excluded) {
            return !required.contains(u) && excluded.size() <= q.b;
        },
        [&](const VertexSet & in, const VertexSet & excluded) {
            if (in.size() == q.a && excluded.size() == q.b && required.subset_of(in))
                out.push_back(in);
            return false;
        });
    std::sort(out.begin(), out.end());
    return out;
}

/// g(mu) = 1 / (mu^mu * (1-mu)^(1-mu)); reporting only.
inline double g_of(double mu)
{
    if (!(mu > 0.0 && mu < 1.0))
        throw Error(ErrorKind::DomainError, "g(mu) needs 0 < mu < 1");
    return 1.0 / (std::pow(mu, mu) * std::pow(1.0 - mu, 1.0 - mu));
}

inline double g_of(const Fraction & mu) { return g_of(mu.to_double()); }

/// Calls f(S) for every subset S of universe with |S| <= max_size, the empty
/// set first; grouped by size.
template <class F>
void for_each_subset_up_to(const VertexSet & universe, int max_size, F && f)
{
    const auto members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    max_size = std::min(max_size, m);
    struct Rec {
        const std::vector<Vertex> & members;
        F & f;
        int m;

        void operator()(int start, int remaining, VertexSet current)
        {
            if (remaining == 0) {
                f(current);
                return;
            }
            for (int i = start; i <= m - remaining; ++i) {
                VertexSet next = current;
                next.insert(members[static_cast<std::size_t>(i)]);
                (*this)(i + 1, remaining - 1, next);
            }
        }
    };
    Rec rec{members, f, m};
    for (int k = 0; k <= max_size; ++k)
        rec(0, k, VertexSet{});
}

/// Every subset of universe (empty set included) of size <= mu * |universe|.
template <class F>
void for_each_subset_at_most(const VertexSet & universe, const Fraction & mu, F && f)
{
    for_each_subset_up_to(universe, static_cast<int>(mu.floor_of(universe.size())), f);
}

inline std::vector<VertexSet> enumerate_subsets_at_most(const VertexSet & universe, const Fraction & mu)
{
    std::vector<VertexSet> out;
    for_each_subset_at_most(universe, mu, [&](const VertexSet & s) { out.push_back(s); });
    return out;
}

} // namespace pathcon
