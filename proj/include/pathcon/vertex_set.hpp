#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pathcon {

using Vertex = int;

/// Fixed-width vertex subset over [0, capacity). Two 64-bit words; the
/// encoding is canonical, so equality and ordering of sets are equality
/// and ordering of the words.
class VertexSet {
public:
    static constexpr int capacity = 128;
    static constexpr int word_bits = 64;
    static constexpr int words = capacity / word_bits;

    constexpr VertexSet() = default;

    constexpr VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    /// The set {0, ..., n-1}.
    static constexpr VertexSet prefix(int n)
    {
        VertexSet s;
        for (int w = 0; w < words && n > 0; ++w, n -= word_bits)
            s.bits_[w] = n >= word_bits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static constexpr VertexSet single(Vertex v)
    {
        VertexSet s;
        s.insert(v);
        return s;
    }

    static VertexSet from(const std::vector<Vertex> & vs)
    {
        VertexSet s;
        for (Vertex v : vs)
            s.insert(v);
        return s;
    }

    constexpr void insert(Vertex v) { bits_[v >> 6] |= bit(v); }
    constexpr void erase(Vertex v) { bits_[v >> 6] &= ~bit(v); }
    constexpr bool contains(Vertex v) const { return (bits_[v >> 6] & bit(v)) != 0; }

    constexpr int size() const
    {
        int c = 0;
        for (auto w : bits_)
            c += std::popcount(w);
        return c;
    }

    constexpr bool empty() const
    {
        for (auto w : bits_)
            if (w)
                return false;
        return true;
    }

    /// Smallest member, or -1 for the empty set.
    constexpr Vertex min() const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w])
                return w * word_bits + std::countr_zero(bits_[w]);
        return -1;
    }

    /// Largest member, or -1 for the empty set.
    constexpr Vertex max() const
    {
        for (int w = words - 1; w >= 0; --w)
            if (bits_[w])
                return w * word_bits + word_bits - 1 - std::countl_zero(bits_[w]);
        return -1;
    }

    constexpr bool intersects(const VertexSet & o) const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w] & o.bits_[w])
                return true;
        return false;
    }

    constexpr bool subset_of(const VertexSet & o) const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w] & ~o.bits_[w])
                return false;
        return true;
    }

    constexpr VertexSet & operator|=(const VertexSet & o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] |= o.bits_[w];
        return *this;
    }

    constexpr VertexSet & operator&=(const VertexSet & o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= o.bits_[w];
        return *this;
    }

    constexpr VertexSet & operator-=(const VertexSet & o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= ~o.bits_[w];
        return *this;
    }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    /// Complement within {0, ..., n-1}.
    constexpr VertexSet complement(int n) const { return prefix(n) - *this; }

    friend constexpr bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Canonical order: by the high word first, i.e. numeric order of the
    /// 128-bit encoding.
    friend constexpr std::strong_ordering operator<=>(const VertexSet & a, const VertexSet & b)
    {
        for (int w = words - 1; w >= 0; --w)
            if (auto c = a.bits_[w] <=> b.bits_[w]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    constexpr std::uint64_t word(int w) const { return bits_[w]; }

    std::size_t hash() const
    {
        std::uint64_t h = bits_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= bits_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr iterator() = default;
        constexpr iterator(const VertexSet * s, int word) : set_(s), word_(word)
        {
            if (set_)
                current_ = set_->bits_[0];
            advance_to_valid();
        }

        constexpr Vertex operator*() const { return word_ * word_bits + std::countr_zero(current_); }

        constexpr iterator & operator++()
        {
            current_ &= current_ - 1;
            advance_to_valid();
            return *this;
        }

        constexpr iterator operator++(int)
        {
            auto tmp = *this;
            ++*this;
            return tmp;
        }

        friend constexpr bool operator==(const iterator & a, const iterator & b)
        {
            return a.word_ == b.word_ && a.current_ == b.current_;
        }

    private:
        constexpr void advance_to_valid()
        {
            while (current_ == 0 && word_ < words) {
                ++word_;
                current_ = word_ < words ? set_->bits_[word_] : 0;
            }
        }

        const VertexSet * set_ = nullptr;
        int word_ = words;
        std::uint64_t current_ = 0;
    };

    constexpr iterator begin() const { return iterator(this, 0); }
    constexpr iterator end() const { return iterator(nullptr, words); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, words> bits_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet & s) const { return s.hash(); }
};

} // namespace pathcon

template <>
struct std::hash<pathcon::VertexSet> {
    std::size_t operator()(const pathcon::VertexSet & s) const { return s.hash(); }
};
