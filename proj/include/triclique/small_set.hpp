#pragma once

#include <bit>
#include <cstdint>
#include <compare>

namespace triclique {

/// Subset of a ground set with at most 64 elements, stored as a bit mask.
/// Elements are indices into the owning ground set's declaration order.
struct SmallSet {
    std::uint64_t bits = 0;

    static constexpr int kMaxGround = 64;

    static SmallSet full(int n) {
        return SmallSet{n >= 64 ? ~0ull : ((1ull << n) - 1ull)};
    }
    static SmallSet single(int i) { return SmallSet{1ull << i}; }

    bool contains(int i) const { return (bits >> i) & 1ull; }
    SmallSet with(int i) const { return SmallSet{bits | (1ull << i)}; }
    SmallSet without(int i) const { return SmallSet{bits & ~(1ull << i)}; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(SmallSet o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(SmallSet o) const { return subset_of(o) && bits != o.bits; }

    friend SmallSet operator&(SmallSet a, SmallSet b) { return {a.bits & b.bits}; }
    friend SmallSet operator|(SmallSet a, SmallSet b) { return {a.bits | b.bits}; }
    friend SmallSet operator-(SmallSet a, SmallSet b) { return {a.bits & ~b.bits}; }
    friend bool operator==(SmallSet a, SmallSet b) = default;

    /// Iterates set members in ascending index order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

/// Lexicographic comparison of the ascending index sequences, e.g.
/// {} < {0} < {0,1} < {0,2} < {1}.
inline int lex_compare(SmallSet a, SmallSet b) {
    if (a.bits == b.bits) return 0;
    // Walk common members; the first position where they differ decides.
    std::uint64_t x = a.bits, y = b.bits;
    while (x && y) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j ? -1 : 1;
        x &= x - 1;
        y &= y - 1;
    }
    return x ? 1 : -1; // the shorter sequence is a strict prefix
}

inline bool lex_less(SmallSet a, SmallSet b) { return lex_compare(a, b) < 0; }

} // namespace triclique
