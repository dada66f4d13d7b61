#pragma once

#include "pathcon/dcs.hpp"
#include "pathcon/enumerate.hpp"
#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/gamma_table.hpp"
#include "pathcon/graph.hpp"

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

namespace pathcon {

enum class Subroutine { SmallOddEven, Balanced, HeavyPair, NearSmallOddEven };

constexpr std::string_view to_string(Subroutine s)
{
    switch (s) {
        case Subroutine::SmallOddEven: return "soepc";
        case Subroutine::Balanced: return "bpc";
        case Subroutine::HeavyPair: return "tdcpc";
        case Subroutine::NearSmallOddEven: return "nsoepc";
    }
    return "?";
}

struct SubroutineResult {
    int t = 0;
    std::optional<WitnessStructure> witness;
    Subroutine subroutine = Subroutine::SmallOddEven;
};

namespace detail {

inline void require_parameter(const Fraction & f, std::string_view name)
{
    if (!f.positive())
        throw Error(ErrorKind::DomainError, std::string(name) + " must lie in (0, 1]");
}

/// If contracting every part gives a path, the parts in path order.
/// G[universe] must be connected, with `parts` partitioning universe into
/// connected pieces.
inline std::optional<std::vector<std::size_t>> path_of_parts(const Graph & g, const std::vector<VertexSet> & parts)
{
    const std::size_t k = parts.size();
    std::vector<std::vector<std::size_t>> adj(k);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
        auto n = neighborhood(g, parts[i]);
        for (std::size_t j = i + 1; j < k; ++j)
            if (n.intersects(parts[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
                if (adj[i].size() > 2 || adj[j].size() > 2)
                    return std::nullopt;
                ++edges;
            }
    }
    if (edges + 1 != k)
        return std::nullopt;
    std::size_t start = 0;
    while (start < k && adj[start].size() > 1)
        ++start;
    if (start == k)
        return std::nullopt;
    std::vector<std::size_t> order{start};
    std::size_t prev = k;
    while (order.size() < k) {
        std::size_t cur = order.back(), next = k;
        for (auto j : adj[cur])
            if (j != prev)
                next = j;
        if (next == k)
            return std::nullopt;
        prev = cur;
        order.push_back(next);
    }
    return order;
}

inline std::vector<VertexSet> split_by_side(const Graph & g, const VertexSet & s)
{
    auto parts = components(g, s);
    auto rest = components(g, g.vertices() - s);
    parts.insert(parts.end(), rest.begin(), rest.end());
    return parts;
}

inline WitnessStructure join_halves(const WitnessStructure & front, const WitnessStructure & back)
{
    WitnessStructure w = front;
    w.parts.insert(w.parts.end(), back.parts.rbegin(), back.parts.rend());
    return w;
}

} // namespace detail

/// Witness structures in which the odd or the even bags hold at most
/// beta*n/2 vertices: guess that union, contract the components on both
/// sides and keep the longest path.
inline SubroutineResult soepc(const Graph & g, const Fraction & beta)
{
    detail::require_parameter(beta, "beta");
    SubroutineResult best{0, std::nullopt, Subroutine::SmallOddEven};
    for_each_subset_up_to(g.vertices(), static_cast<int>(beta.half().floor_of(g.n())), [&](const VertexSet & s) {
        auto parts = detail::split_by_side(g, s);
        if (static_cast<int>(parts.size()) <= best.t)
            return;
        auto order = detail::path_of_parts(g, parts);
        if (!order)
            return;
        WitnessStructure w;
        for (auto i : *order)
            w.parts.push_back(parts[i]);
        best.t = w.t();
        best.witness = std::move(w);
    });
    return best;
}

/// Witness structures that split after some bag into two halves whose closed
/// neighborhoods hold at most alpha*n vertices each. Returns 1 if no split
/// qualifies.
inline SubroutineResult bpc(const Graph & g, const Fraction & alpha)
{
    detail::require_parameter(alpha, "alpha");
    SubroutineResult best{1, std::nullopt, Subroutine::Balanced};
    const auto table = compute_gamma(g, alpha);
    const VertexSet all = g.vertices();
    for (const auto & s : table.keys()) {
        const VertexSet rest = all - s;
        const auto * other = rest.empty() ? nullptr : table.find(rest);
        if (!other)
            continue;
        const int t = table.gamma(s) + other->gamma;
        if (t > best.t) {
            best.t = t;
            best.witness = detail::join_halves(reconstruct(g, table, s), reconstruct(g, table, rest));
        }
    }
    return best;
}

/// Witness structures with two consecutive bags holding at least gamma*n
/// vertices, flanked on each side by a non-empty prefix/suffix whose closed
/// neighborhood holds at most (1 - gamma/2)*n vertices. The flanks come from
/// the nice-solution table; the heavy pair from 2-DCS. Returns 2 if nothing
/// qualifies.
inline SubroutineResult tdcpc(const Graph & g, const Fraction & gamma)
{
    detail::require_parameter(gamma, "gamma");
    SubroutineResult best{2, std::nullopt, Subroutine::HeavyPair};
    const Fraction rho = gamma.half().complement();
    const auto table = compute_gamma(g, rho);
    const VertexSet all = g.vertices();
    const int max_outside = static_cast<int>(gamma.complement().floor_of(g.n()));
    for_each_subset_up_to(all, max_outside, [&](const VertexSet & s) {
        if (s.size() < 2)
            return;
        auto parts = components(g, s);
        if (parts.size() != 2)
            return;
        const auto * e1 = table.find(parts[0]);
        const auto * e2 = table.find(parts[1]);
        if (!e1 || !e2)
            return;
        const int t = e1->gamma + e2->gamma + 2;
        if (t <= best.t)
            return;
        const VertexSet n1 = neighborhood(g, parts[0]);
        const VertexSet n2 = neighborhood(g, parts[1]);
        if (n1.intersects(n2))
            return;
        auto sub = induced(g, all - s);
        auto split = solve_2dcs(sub.graph, sub.lower(n1), sub.lower(n2));
        if (!split)
            return;
        WitnessStructure w = reconstruct(g, table, parts[0]);
        w.parts.push_back(sub.lift(split->v1));
        w.parts.push_back(sub.lift(split->v2));
        best.t = t;
        best.witness = detail::join_halves(w, reconstruct(g, table, parts[1]));
    });
    return best;
}

/// Witness structures where removing one inner bag W_i from its parity
/// class leaves at most eps*n vertices. Guess that remainder S, contract the
/// components of G[S] and G-S, and split the component holding W_i three ways
/// with 3-DCS, using the neighbors of the flanking S-components as terminals.
/// Returns 2 if nothing qualifies.
inline SubroutineResult nsoepc(const Graph & g, const Fraction & eps)
{
    detail::require_parameter(eps, "epsilon");
    SubroutineResult best{2, std::nullopt, Subroutine::NearSmallOddEven};
    const VertexSet all = g.vertices();
    for_each_subset_up_to(all, static_cast<int>(eps.floor_of(g.n())), [&](const VertexSet & s) {
        if (s == all)
            return;
        auto inside = components(g, s);
        auto outside = components(g, all - s);
        std::vector<VertexSet> parts = inside;
        parts.insert(parts.end(), outside.begin(), outside.end());
        const int t = static_cast<int>(parts.size()) + 2;
        if (t <= best.t)
            return;
        auto order = detail::path_of_parts(g, parts);
        if (!order)
            return;
        for (std::size_t ci = 0; ci < outside.size(); ++ci) {
            const VertexSet & core = outside[ci];
            const VertexSet around = neighborhood(g, core);
            std::vector<std::size_t> flanks;
            for (std::size_t j = 0; j < inside.size(); ++j)
                if (around.intersects(inside[j]))
                    flanks.push_back(j);
            // With S empty the whole graph is the core and both terminal
            // sides are guessed.
            VertexSet z1, z2;
            if (!flanks.empty())
                z1 = neighborhood(g, inside[flanks[0]]) & core;
            if (flanks.size() > 1)
                z2 = neighborhood(g, inside[flanks[1]]) & core;
            if (core.size() < 3 || z1.intersects(z2))
                continue;
            auto sub = induced(g, core);
            auto split = solve_3dcs(sub.graph, sub.lower(z1), sub.lower(z2));
            if (!split)
                continue;

            const std::size_t core_part = inside.size() + ci;
            const auto pos = static_cast<std::size_t>(std::find(order->begin(), order->end(), core_part) - order->begin());
            bool first_side_leads = true;
            if (!flanks.empty()) {
                // V_1 faces the first flank; flip when that flank comes later.
                first_side_leads = pos > 0 && (*order)[pos - 1] == flanks[0];
            }
            WitnessStructure w;
            for (std::size_t k = 0; k < order->size(); ++k) {
                if (k != pos) {
                    w.parts.push_back(parts[(*order)[k]]);
                    continue;
                }
                VertexSet a = sub.lift(split->v1), mid = sub.lift(split->u), b = sub.lift(split->v2);
                if (!first_side_leads)
                    std::swap(a, b);
                w.parts.push_back(a);
                w.parts.push_back(mid);
                w.parts.push_back(b);
            }
            best.t = t;
            best.witness = std::move(w);
            return;
        }
    });
    return best;
}

} // namespace pathcon
