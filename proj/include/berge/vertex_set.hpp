#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#ifndef BERGE_MAX_VERTICES
#define BERGE_MAX_VERTICES 64
#endif

namespace berge {

using Vertex = int;

inline constexpr int max_vertices = BERGE_MAX_VERTICES;

/// A set of vertices stored as a fixed-width bit row. Ordering is
/// lexicographic on the ascending element lists.
class VertexSet {
public:
    static constexpr int word_bits = 64;
    static constexpr int words = (max_vertices + word_bits - 1) / word_bits;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (auto v : vs)
            insert(v);
    }

    static VertexSet range(Vertex first, Vertex last)
    {
        VertexSet s;
        for (Vertex v = first; v < last; ++v)
            s.insert(v);
        return s;
    }

    void insert(Vertex v) { bits_[v / word_bits] |= std::uint64_t{1} << (v % word_bits); }
    void erase(Vertex v) { bits_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits)); }

    bool contains(Vertex v) const
    {
        return (bits_[v / word_bits] >> (v % word_bits)) & 1U;
    }

    int size() const
    {
        int c = 0;
        for (auto w : bits_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
    }

    /// Smallest element, or -1 when empty.
    Vertex first() const { return next(0); }

    /// Smallest element >= from, or -1.
    Vertex next(Vertex from) const
    {
        if (from >= words * word_bits)
            return -1;
        int w = from / word_bits;
        std::uint64_t cur = bits_[w] & (~std::uint64_t{0} << (from % word_bits));
        while (true) {
            if (cur != 0)
                return w * word_bits + std::countr_zero(cur);
            if (++w == words)
                return -1;
            cur = bits_[w];
        }
    }

    /// Largest element, or -1.
    Vertex last() const
    {
        for (int w = words - 1; w >= 0; --w)
            if (bits_[w] != 0)
                return w * word_bits + (word_bits - 1 - std::countl_zero(bits_[w]));
        return -1;
    }

    std::vector<Vertex> elements() const
    {
        std::vector<Vertex> out;
        for (Vertex v = first(); v != -1; v = next(v + 1))
            out.push_back(v);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int w = 0; w < words; ++w) {
            for (std::uint64_t b = bits_[w]; b != 0; b &= b - 1)
                f(w * word_bits + std::countr_zero(b));
        }
    }

    bool is_subset_of(const VertexSet& other) const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w] & ~other.bits_[w])
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const
    {
        for (int w = 0; w < words; ++w)
            if (bits_[w] & other.bits_[w])
                return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= o.bits_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] |= o.bits_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] &= ~o.bits_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o)
    {
        for (int w = 0; w < words; ++w)
            bits_[w] ^= o.bits_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Lexicographic on sorted element lists: at the first element x of the
    // symmetric difference, the set holding x is smaller unless the other set
    // has run out of elements (it is then a proper prefix).
    friend bool operator<(const VertexSet& a, const VertexSet& b)
    {
        VertexSet d = a ^ b;
        Vertex x = d.first();
        if (x == -1)
            return false;
        if (a.contains(x))
            return b.next(x + 1) != -1;
        return a.next(x + 1) == -1;
    }
    friend bool operator>(const VertexSet& a, const VertexSet& b) { return b < a; }
    friend bool operator<=(const VertexSet& a, const VertexSet& b) { return !(b < a); }
    friend bool operator>=(const VertexSet& a, const VertexSet& b) { return !(a < b); }

    std::size_t hash() const
    {
        std::size_t h = 0;
        for (auto w : bits_)
            h = h * 0x9E3779B97F4A7C15ULL + w;
        return h;
    }

private:
    std::array<std::uint64_t, words> bits_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Every `size`-element subset of `from`, in lexicographic order.
template <typename F>
void for_each_subset(const VertexSet& from, int size, F&& f)
{
    auto elems = from.elements();
    const int m = static_cast<int>(elems.size());
    if (size < 0 || size > m)
        return;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx)
            s.insert(elems[i]);
        if (!f(s))
            return;
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace berge
