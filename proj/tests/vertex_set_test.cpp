#include "pathcon/vertex_set.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

using pathcon::VertexSet;

TEST(VertexSet, EmptyByDefault)
{
    VertexSet s;
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(s.size(), 0);
    EXPECT_EQ(s.min(), -1);
    EXPECT_EQ(s.max(), -1);
}

TEST(VertexSet, InsertEraseAcrossWords)
{
    VertexSet s{3, 64, 127};
    EXPECT_EQ(s.size(), 3);
    EXPECT_TRUE(s.contains(64));
    EXPECT_EQ(s.min(), 3);
    EXPECT_EQ(s.max(), 127);
    s.erase(3);
    EXPECT_EQ(s.min(), 64);
    EXPECT_EQ(s.to_vector(), (std::vector<int>{64, 127}));
}

TEST(VertexSet, PrefixAndComplement)
{
    EXPECT_EQ(VertexSet::prefix(0).size(), 0);
    EXPECT_EQ(VertexSet::prefix(70).size(), 70);
    EXPECT_EQ(VertexSet::prefix(128).size(), 128);
    VertexSet s{1, 4};
    EXPECT_EQ(s.complement(6), (VertexSet{0, 2, 3, 5}));
}

TEST(VertexSet, Algebra)
{
    VertexSet a{0, 1, 2}, b{2, 3};
    EXPECT_EQ(a | b, (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(a & b, (VertexSet{2}));
    EXPECT_EQ(a - b, (VertexSet{0, 1}));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_FALSE((a - b).intersects(b));
    EXPECT_TRUE((VertexSet{1, 2}).subset_of(a));
    EXPECT_FALSE(b.subset_of(a));
}

TEST(VertexSet, EncodingIsCanonical)
{
    std::mt19937_64 rng(7);
    std::set<std::vector<int>> seen_lists;
    std::unordered_set<VertexSet> seen_sets;
    for (int i = 0; i < 2000; ++i) {
        VertexSet s;
        for (int j = 0; j < 4; ++j)
            s.insert(static_cast<int>(rng() % 100));
        seen_lists.insert(s.to_vector());
        seen_sets.insert(s);
        EXPECT_EQ(VertexSet::from(s.to_vector()), s);
    }
    EXPECT_EQ(seen_lists.size(), seen_sets.size());
}

TEST(VertexSet, OrderComparesHighWordFirst)
{
    EXPECT_LT((VertexSet{0, 1, 2}), (VertexSet{64}));
    EXPECT_LT((VertexSet{1}), (VertexSet{2}));
}
