#include "pathcon/dcs.hpp"
#include "pathcon/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pathcon;
using namespace pathcon::testing;

namespace {

ErrorKind kind_of(auto && f)
{
    try {
        f();
    } catch (const Error & e) {
        return e.kind();
    }
    return ErrorKind::DomainError;
}

std::vector<VertexSet> brute_minimal_connectors(const Graph & g, const VertexSet & z)
{
    std::vector<VertexSet> connectors, out;
    for (const auto & s : power_set(g.n()))
        if (z.subset_of(s) && is_connected(g, s))
            connectors.push_back(s);
    for (const auto & s : connectors) {
        bool minimal = true;
        for (const auto & t : connectors)
            if (t != s && t.subset_of(s))
                minimal = false;
        if (minimal)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Dcs2, Examples)
{
    auto p = path(3);
    auto a = solve_2dcs(p, {0}, {2});
    ASSERT_TRUE(a);
    EXPECT_TRUE(is_valid_bipartition(p, *a, {0}, {2}));
    EXPECT_FALSE(solve_2dcs(p, {0, 2}, {1}));
    auto k3 = complete(3);
    auto b = solve_2dcs(k3, {0}, {1});
    ASSERT_TRUE(b);
    EXPECT_TRUE(is_valid_bipartition(k3, *b, {0}, {1}));
}

TEST(Dcs2, Errors)
{
    EXPECT_EQ(kind_of([] { solve_2dcs(path(3), {0, 1}, {1}); }), ErrorKind::TerminalsOverlap);
    EXPECT_EQ(kind_of([] { solve_2dcs(path(3), {}, {1}); }), ErrorKind::EmptyTerminal);
}

TEST(MinimalConnectors, Examples)
{
    EXPECT_EQ(enumerate_minimal_connectors(path(4), {0, 3}), (std::vector<VertexSet>{{0, 1, 2, 3}}));
    EXPECT_EQ(enumerate_minimal_connectors(star(3), {1, 2}), (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(enumerate_minimal_connectors(cycle(5), {3}), (std::vector<VertexSet>{{3}}));
    EXPECT_EQ(enumerate_minimal_connectors(cycle(4), {0, 2}), (std::vector<VertexSet>{{0, 1, 2}, {0, 2, 3}}));
}

TEST(MinimalConnectors, MatchBruteForce)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 80; ++i) {
        int n = 3 + static_cast<int>(rng() % 8);
        auto g = random_connected_graph(n, 0.3, rng);
        VertexSet z;
        int k = 1 + static_cast<int>(rng() % 3);
        while (z.size() < k)
            z.insert(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
        auto got = enumerate_minimal_connectors(g, z);
        EXPECT_EQ(got, brute_minimal_connectors(g, z));
        for (const auto & s : got)
            EXPECT_TRUE(is_minimal_connector(g, s, z));
    }
}

TEST(Immovable, Examples)
{
    auto p5 = path(5);
    TriPartition loose{{0, 1}, {2}, {3, 4}};
    EXPECT_FALSE(is_immovable(p5, loose, {0}, {4}));
    auto fixed = make_immovable(p5, loose, {0}, {4});
    EXPECT_EQ(fixed, (TriPartition{{0}, {1, 2, 3}, {4}}));
    EXPECT_TRUE(is_immovable(p5, fixed, {0}, {4}));
    EXPECT_EQ(make_immovable(p5, fixed, {0}, {4}), fixed);

    auto p3 = path(3);
    TriPartition tight{{0}, {1}, {2}};
    EXPECT_TRUE(is_immovable(p3, tight, {0}, {2}));
    EXPECT_EQ(make_immovable(p3, tight, {0}, {2}), tight);
}

TEST(Immovable, RejectsInvalidSolution)
{
    EXPECT_EQ(kind_of([] { is_immovable(path(3), TriPartition{{0, 1}, {}, {2}}, {0}, {2}); }),
              ErrorKind::InvalidSolution);
    EXPECT_EQ(kind_of([] { make_immovable(path(3), TriPartition{{0}, {2}, {1}}, {0}, {1}); }),
              ErrorKind::InvalidSolution);
}

TEST(Dcs3, SmallExamples)
{
    auto p5 = path(5);
    auto a = solve_small_3dcs(p5, {0}, {4});
    ASSERT_TRUE(a);
    EXPECT_TRUE(is_valid_tripartition(p5, *a, {0}, {4}));
    EXPECT_FALSE(solve_small_3dcs(complete(3), {0}, {1}));
    EXPECT_FALSE(solve_small_3dcs(path(4), {0, 1}, {2}));
}

TEST(Dcs3, Examples)
{
    auto p5 = path(5);
    auto a = solve_3dcs(p5, {0}, {4});
    ASSERT_TRUE(a);
    EXPECT_TRUE(is_valid_tripartition(p5, *a, {0}, {4}));
    auto s = star(3);
    auto b = solve_3dcs(s, {1}, {2});
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, (TriPartition{{1}, {0, 3}, {2}}));
    EXPECT_FALSE(solve_3dcs(complete(4), {0}, {1}));
    EXPECT_EQ(kind_of([] { solve_3dcs(path(3), {0}, {0}); }), ErrorKind::TerminalsOverlap);
}

TEST(Dcs3, EmptyTerminalsAreGuessed)
{
    auto a = solve_3dcs(path(3), {}, {});
    ASSERT_TRUE(a);
    EXPECT_TRUE(is_valid_tripartition(path(3), *a, {}, {}));
    EXPECT_FALSE(solve_3dcs(cycle(5), {}, {}));
    auto b = solve_3dcs(star(3), {1}, {});
    ASSERT_TRUE(b);
    EXPECT_TRUE(b->v1.contains(1));
    EXPECT_FALSE(solve_3dcs(complete(4), {}, {}));
}

TEST(Dcs3, BothRoutesAgreeWithOracle)
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 120; ++i) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = random_connected_graph(n, 0.35, rng);
        auto tri = all_connected_tripartitions(g);
        Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        Vertex b = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (a == b)
            continue;
        VertexSet z1{a}, z2{b};
        bool expected = dcs_solvable(tri, z1, z2);
        auto small = solve_small_3dcs(g, z1, z2);
        auto middle = detail::solve_3dcs_by_middle(g, z1, z2);
        EXPECT_EQ(small.has_value(), expected);
        EXPECT_EQ(middle.has_value(), expected);
        if (small) {
            EXPECT_TRUE(is_valid_tripartition(g, *small, z1, z2));
        }
        if (middle) {
            EXPECT_TRUE(is_valid_tripartition(g, *middle, z1, z2));
        }
    }
}

TEST(P5, Examples)
{
    EXPECT_TRUE(p5_contract(path(5)));
    auto w = p5_witness(path(7));
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(path(7), *w));
    EXPECT_EQ(w->t(), 5);
    EXPECT_FALSE(p5_contract(complete(4)));
    EXPECT_FALSE(p5_contract(cycle(8)));
}

TEST(P5, AgreesWithOracle)
{
    for (const auto & g : connected_graph_classes(7))
        EXPECT_EQ(p5_contract(g), oracle_path_contraction(g).t >= 5);
}
