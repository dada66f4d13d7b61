#include "pathcon/enumerate.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace pathcon;
using namespace pathcon::testing;

namespace {

std::vector<VertexSet> brute_small_connected(const Graph & g, const Fraction & rho)
{
    std::vector<VertexSet> out;
    for (const auto & s : power_set(g.n()))
        if (!s.empty() && is_connected(g, s) && rho.admits(closed_neighborhood(g, s).size(), g.n()))
            out.push_back(s);
    std::sort(out.begin(), out.end(), size_then_encoding);
    return out;
}

std::vector<VertexSet> brute_extenders(const Graph & g, const ExtenderQuery & q)
{
    std::vector<VertexSet> out;
    const VertexSet need = neighborhood(g, q.base);
    const VertexSet rest = g.vertices() - q.base;
    for (const auto & a : power_set(g.n())) {
        if (a.empty() || !a.subset_of(rest) || !need.subset_of(a) || a.size() != q.a)
            continue;
        if (is_connected(g, a) && (neighborhood(g, a) & rest).size() == q.b)
            out.push_back(a);
    }
    return out;
}

} // namespace

TEST(EnumerateSmallConnected, PathRhoOne)
{
    auto out = enumerate_small_connected(path(4), Fraction::one());
    std::vector<VertexSet> expected{{0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 1, 2}, {1, 2, 3}, {0, 1, 2, 3}};
    EXPECT_EQ(out, expected);
}

TEST(EnumerateSmallConnected, PathRhoHalf)
{
    EXPECT_EQ(enumerate_small_connected(path(4), Fraction(1, 2)), (std::vector<VertexSet>{{0}, {3}}));
}

TEST(EnumerateSmallConnected, CompleteRhoHalfIsEmpty)
{
    EXPECT_TRUE(enumerate_small_connected(complete(4), Fraction(1, 2)).empty());
}

TEST(EnumerateSmallConnected, MatchesBruteForceAndIsMonotone)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        int n = 3 + static_cast<int>(rng() % 10);
        auto g = random_graph(n, 0.3, rng);
        std::vector<VertexSet> prev;
        for (auto rho : {Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction::one()}) {
            auto out = enumerate_small_connected(g, rho);
            EXPECT_EQ(out, brute_small_connected(g, rho));
            std::set<VertexSet> now(out.begin(), out.end());
            EXPECT_EQ(now.size(), out.size());
            for (const auto & s : prev)
                EXPECT_TRUE(now.count(s));
            prev = out;
        }
    }
}

TEST(EnumerateExtenders, PathExamples)
{
    auto g = path(4);
    EXPECT_EQ(enumerate_extenders(g, {{0}, 1, 1}), (std::vector<VertexSet>{{1}}));
    EXPECT_EQ(enumerate_extenders(g, {{0}, 2, 1}), (std::vector<VertexSet>{{1, 2}}));
    EXPECT_TRUE(enumerate_extenders(g, {{0}, 1, 2}).empty());
    EXPECT_EQ(enumerate_extenders(g, {{0}, 3, 0}), (std::vector<VertexSet>{{1, 2, 3}}));
}

TEST(EnumerateExtenders, WholeComponentHasNone)
{
    EXPECT_TRUE(enumerate_extenders(path(3), {path(3).vertices(), 1, 0}).empty());
}

TEST(EnumerateExtenders, MatchesBruteForce)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        int n = 4 + static_cast<int>(rng() % 7);
        auto g = random_connected_graph(n, 0.35, rng);
        auto keys = enumerate_small_connected(g, Fraction(3, 4));
        for (std::size_t k = 0; k < keys.size(); k += 3)
            for (int a = 1; a <= n - keys[k].size(); ++a)
                for (int b = 0; a + b + keys[k].size() <= n; ++b) {
                    ExtenderQuery q{keys[k], a, b};
                    EXPECT_EQ(enumerate_extenders(g, q), brute_extenders(g, q));
                }
    }
}

TEST(EnumerateExtenders, BudgetedStreamCoversExactQueries)
{
    std::mt19937_64 rng(13);
    auto g = random_connected_graph(9, 0.3, rng);
    for (const auto & s : enumerate_small_connected(g, Fraction::one())) {
        if (s == g.vertices())
            continue;
        std::set<std::pair<VertexSet, int>> streamed;
        for_each_extender(g, s, 7, [&](const VertexSet & a, int b) { streamed.insert({a, b}); });
        std::set<std::pair<VertexSet, int>> expected;
        for (int a = 1; a <= 7; ++a)
            for (int b = 0; s.size() + a + b <= 7; ++b)
                for (const auto & x : enumerate_extenders(g, {s, a, b}))
                    expected.insert({x, b});
        EXPECT_EQ(streamed, expected);
    }
}

TEST(GOfMu, Values)
{
    EXPECT_DOUBLE_EQ(g_of(0.5), 2.0);
    EXPECT_NEAR(g_of(0.1), g_of(0.9), 1e-12);
    // 1 / (0.092^0.092 * 0.908^0.908)
    EXPECT_NEAR(g_of(Fraction(92, 1000)), 1.35953, 1e-5);
    EXPECT_THROW(g_of(0.0), Error);
    EXPECT_THROW(g_of(1.0), Error);
}

TEST(SubsetsAtMost, Counts)
{
    EXPECT_EQ(enumerate_subsets_at_most(VertexSet::prefix(4), Fraction(1, 4)).size(), 5u);
    EXPECT_EQ(enumerate_subsets_at_most(VertexSet::prefix(4), Fraction::one()).size(), 16u);
    EXPECT_EQ(enumerate_subsets_at_most(VertexSet::prefix(5), Fraction(2, 5)).size(), 16u);
    auto first = enumerate_subsets_at_most(VertexSet{2, 7, 9}, Fraction::one());
    EXPECT_TRUE(first.front().empty());
    std::set<VertexSet> unique(first.begin(), first.end());
    EXPECT_EQ(unique.size(), 8u);
}
