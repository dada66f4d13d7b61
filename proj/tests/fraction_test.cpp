#include "pathcon/fraction.hpp"

#include <gtest/gtest.h>

using pathcon::Error;
using pathcon::ErrorKind;
using pathcon::Fraction;

TEST(Fraction, ParsesDecimalsExactly)
{
    auto f = Fraction::parse("0.9996");
    EXPECT_EQ(f, Fraction(9996, 10000));
    EXPECT_EQ(f.num(), 2499);
    EXPECT_EQ(f.den(), 2500);
    EXPECT_EQ(Fraction::parse("1"), Fraction::one());
    EXPECT_EQ(Fraction::parse("3/4"), Fraction(3, 4));
    EXPECT_EQ(Fraction::parse(".5"), Fraction(1, 2));
    EXPECT_EQ(Fraction::parse("1.0"), Fraction::one());
}

TEST(Fraction, RejectsGarbage)
{
    for (const char * bad : {"", "abc", "0.", "1/0", "-1", "0.5x", "2/x"}) {
        try {
            Fraction::parse(bad);
            ADD_FAILURE() << bad;
        } catch (const Error & e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
        }
    }
}

TEST(Fraction, RangeChecked)
{
    EXPECT_THROW(Fraction(5, 4), Error);
    EXPECT_THROW(Fraction(1, 0), Error);
    EXPECT_THROW(Fraction::parse("1.5"), Error);
}

TEST(Fraction, AdmitsUsesCrossMultiplication)
{
    Fraction rho(9996, 10000);
    EXPECT_TRUE(rho.admits(9996, 10000));
    EXPECT_FALSE(rho.admits(9997, 10000));
    // 0.9996 * 14 = 13.9944
    EXPECT_TRUE(rho.admits(13, 14));
    EXPECT_FALSE(rho.admits(14, 14));
    EXPECT_EQ(rho.floor_of(14), 13);
    EXPECT_EQ(Fraction(1, 2).floor_of(5), 2);
}

TEST(Fraction, HalfAndComplement)
{
    Fraction g(9864, 10000);
    EXPECT_EQ(g.half(), Fraction(4932, 10000));
    EXPECT_EQ(g.half().complement(), Fraction(5068, 10000));
    EXPECT_TRUE(Fraction(1, 3) < Fraction(1, 2));
    EXPECT_TRUE(Fraction(1, 2) <= Fraction(2, 4));
}
