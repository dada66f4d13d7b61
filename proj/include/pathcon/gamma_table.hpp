#pragma once

#include "pathcon/enumerate.hpp"
#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/graph.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

namespace pathcon {

/// Nice solutions for every rho-small connected set.
///
/// For a key S, gamma is the largest q such that G[S] has a P_q-witness
/// structure whose last bag contains every vertex of S with a neighbor
/// outside S. `pred` is the last bag of one optimal structure; walking
/// S - pred, S - pred - pred', ... rebuilds the whole structure.
class GammaTable {
public:
    struct Entry {
        int gamma = 1;
        std::optional<VertexSet> pred;
    };

    GammaTable() = default;
    GammaTable(Fraction rho, std::vector<VertexSet> keys) : rho_(rho), keys_(std::move(keys))
    {
        entries_.reserve(keys_.size());
        for (const auto & k : keys_)
            entries_.emplace(k, Entry{});
    }

    const Fraction & rho() const { return rho_; }

    /// Keys ascending by size, ties by encoding.
    const std::vector<VertexSet> & keys() const { return keys_; }
    std::size_t size() const { return keys_.size(); }

    bool contains(const VertexSet & s) const { return entries_.count(s) != 0; }

    const Entry * find(const VertexSet & s) const
    {
        auto it = entries_.find(s);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const Entry & at(const VertexSet & s) const
    {
        if (auto e = find(s))
            return *e;
        throw Error(ErrorKind::KeyAbsent, to_string(s));
    }

    int gamma(const VertexSet & s) const { return at(s).gamma; }

    Entry * find_mutable(const VertexSet & s)
    {
        auto it = entries_.find(s);
        return it == entries_.end() ? nullptr : &it->second;
    }

private:
    Fraction rho_;
    std::vector<VertexSet> keys_;
    std::unordered_map<VertexSet, Entry, VertexSetHash> entries_;
};

/// Forward dynamic program over rho-small connected sets in increasing size.
/// From each key S, every connected extender A of G-S that swallows N(S) and
/// keeps |S| + |A| + |N_{G-S}(A)| <= rho*n lifts S u A to gamma(S) + 1.
/// Extenders with no outside neighbors (S u A = V) are admitted as well.
inline GammaTable compute_gamma(const Graph & g, const Fraction & rho)
{
    GammaTable table(rho, enumerate_small_connected(g, rho));
    const int budget = static_cast<int>(rho.floor_of(g.n()));
    for (const auto & s : table.keys()) {
        const int base = table.find(s)->gamma;
        for_each_extender(g, s, budget, [&](const VertexSet & a, int) {
            auto * target = table.find_mutable(s | a);
            // S u A is rho-small and connected by construction, so always a key.
            if (target && base + 1 > target->gamma) {
                target->gamma = base + 1;
                target->pred = a;
            }
        });
    }
    return table;
}

/// Rebuilds (W_1, ..., W_q) for key s, q = gamma(s), from the pred chain.
inline WitnessStructure reconstruct([[maybe_unused]] const Graph & g, const GammaTable & table, const VertexSet & s)
{
    std::vector<VertexSet> rev;
    VertexSet rest = s;
    for (;;) {
        const auto & e = table.at(rest);
        if (!e.pred) {
            rev.push_back(rest);
            break;
        }
        rev.push_back(*e.pred);
        rest -= *e.pred;
    }
    return {{rev.rbegin(), rev.rend()}};
}

} // namespace pathcon
