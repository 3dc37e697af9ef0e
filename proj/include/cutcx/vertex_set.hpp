#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cutcx {

/// Largest supported vertex count. Vertex sets are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} packed into one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices) insert(v);
    }

    static constexpr VertexSet full(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Complement relative to {0, ..., n-1}.
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

    /// Calls f(v) for each member in ascending order.
    template <typename F>
    constexpr void for_each(F&& f) const
    {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            f(std::countr_zero(rest));
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists. Only meaningful for
/// sets of equal cardinality, which is how facets and faces are compared.
inline bool lex_less(VertexSet a, VertexSet b)
{
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int u = std::countr_zero(x), v = std::countr_zero(y);
        if (u != v) return u < v;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

}  // namespace cutcx

template <>
struct std::hash<cutcx::VertexSet> {
    std::size_t operator()(cutcx::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
