#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace lgr {

/// Largest supported layer width k. Masks are 32-bit words, and the
/// DP tables are 2^k (or 2^2k) wide, so anything beyond this is out of
/// reach anyway.
inline constexpr int kMaxLabels = 20;

/// A subset of one layer's labels. Label x (1-based) lives in bit x-1.
struct Mask {
    std::uint32_t bits = 0;

    constexpr Mask() = default;
    constexpr explicit Mask(std::uint32_t b) : bits(b) {}

    /// All labels 1..k.
    static constexpr Mask all(int k) {
        return Mask(k >= 32 ? ~0u : ((1u << k) - 1u));
    }
    static constexpr Mask bit(int index) { return Mask(1u << index); }
    static constexpr Mask label(int label) { return bit(label - 1); }

    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool test(int index) const { return (bits >> index) & 1u; }
    constexpr bool has_label(int label) const { return test(label - 1); }
    constexpr bool subset_of(Mask other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(Mask other) const { return (bits & other.bits) != 0; }
    /// Index of the lowest set bit; undefined on the empty mask.
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr Mask& operator|=(Mask o) { bits |= o.bits; return *this; }
    constexpr Mask& operator&=(Mask o) { bits &= o.bits; return *this; }

    friend constexpr Mask operator|(Mask a, Mask b) { return Mask(a.bits | b.bits); }
    friend constexpr Mask operator&(Mask a, Mask b) { return Mask(a.bits & b.bits); }
    friend constexpr Mask operator^(Mask a, Mask b) { return Mask(a.bits ^ b.bits); }
    /// Set difference.
    friend constexpr Mask operator-(Mask a, Mask b) { return Mask(a.bits & ~b.bits); }

    friend constexpr bool operator==(Mask, Mask) = default;
    friend constexpr auto operator<=>(Mask, Mask) = default;
};

/// Calls f(index) for every set bit, lowest first.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
    for (std::uint32_t b = m.bits; b != 0; b &= b - 1) {
        f(std::countr_zero(b));
    }
}

/// Calls f(sub) for every submask of m, including the empty mask and m
/// itself, in increasing numeric order.
template <typename F>
constexpr void for_each_submask(Mask m, F&& f) {
    std::uint32_t sub = 0;
    while (true) {
        f(Mask(sub));
        if (sub == m.bits) break;
        sub = (sub - m.bits) & m.bits;
    }
}

}  // namespace lgr
