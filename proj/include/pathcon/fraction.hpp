#pragma once

#include "pathcon/error.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

namespace pathcon {

/// Exact rational in [0, 1]. Threshold checks of the form "k <= f * n" are
/// done by cross-multiplication so that constants such as 9996/10000 never
/// round.
class Fraction {
public:
    constexpr Fraction() = default;

    Fraction(std::int64_t num, std::int64_t den)
    {
        if (den <= 0 || num < 0 || num > den)
            throw Error(ErrorKind::DomainError,
                        "fraction " + std::to_string(num) + "/" + std::to_string(den) + " outside [0, 1]");
        auto g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Fraction one() { return {1, 1}; }

    /// Parses "0.9996", "1", "3/4" exactly. Decimal strings become
    /// k / 10^digits.
    static Fraction parse(std::string_view text)
    {
        auto fail = [&] { throw Error(ErrorKind::Parse, "bad fraction '" + std::string(text) + "'"); };
        if (text.empty())
            fail();
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            auto num = parse_uint(text.substr(0, slash));
            auto den = parse_uint(text.substr(slash + 1));
            if (num < 0 || den <= 0)
                fail();
            return {num, den};
        }
        auto dot = text.find('.');
        auto whole = parse_uint(text.substr(0, dot));
        if (whole < 0 && !(dot == 0 && text.size() > 1))
            fail();
        if (whole < 0)
            whole = 0;
        std::int64_t num = whole, den = 1;
        if (dot != std::string_view::npos) {
            auto frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 12)
                fail();
            auto digits = parse_uint(frac);
            if (digits < 0)
                fail();
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            num = whole * den + digits;
        }
        return {num, den};
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }
    constexpr bool positive() const { return num_ > 0; }

    /// count <= this * n
    constexpr bool admits(std::int64_t count, std::int64_t n) const { return count * den_ <= num_ * n; }

    /// Largest integer k with k <= this * n.
    constexpr std::int64_t floor_of(std::int64_t n) const { return (num_ * n) / den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Fraction half() const { return {num_, den_ * 2}; }

    /// 1 - this
    Fraction complement() const { return {den_ - num_, den_}; }

    friend bool operator==(const Fraction &, const Fraction &) = default;

    friend bool operator<(const Fraction & a, const Fraction & b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator<=(const Fraction & a, const Fraction & b) { return !(b < a); }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    static std::int64_t parse_uint(std::string_view s)
    {
        if (s.empty() || s.size() > 15)
            return -1;
        std::int64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                return -1;
            v = v * 10 + (c - '0');
        }
        return v;
    }

    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

} // namespace pathcon
