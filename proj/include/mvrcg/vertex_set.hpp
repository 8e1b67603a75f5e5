#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mvrcg {

using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Set of vertex ids backed by a single 64-bit word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr VertexId operator*() const { return static_cast<VertexId>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<VertexId> ids) {
        for (VertexId v : ids) bits_ |= bit(v);
    }

    static constexpr VertexSet single(VertexId v) { return VertexSet(bit(v)); }
    static constexpr VertexSet full(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(VertexId v) const { return v < 64 && (bits_ & bit(v)) != 0; }
    constexpr VertexId first() const { return static_cast<VertexId>(std::countr_zero(bits_)); }

    constexpr void insert(VertexId v) { bits_ |= bit(v); }
    constexpr void erase(VertexId v) { bits_ &= ~bit(v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<VertexId> to_vector() const { return {begin(), end()}; }

private:
    static constexpr std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element sequences ({0,3} < {1}, {0} < {0,1}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int v = std::countr_zero(diff);
    const std::uint64_t above = v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1);
    if (a.contains(static_cast<VertexId>(v))) {
        // b either continues with a larger element or has ended (b is a prefix of a).
        return (b.bits() & above) != 0;
    }
    return (a.bits() & above) == 0;
}

/// Calls fn(sub) for every subset of s, including the empty set and s itself.
template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
    const std::uint64_t mask = s.bits();
    std::uint64_t sub = mask;
    while (true) {
        fn(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

/// Calls fn(sub) for every nonempty subset of s.
template <typename Fn>
void for_each_nonempty_subset(VertexSet s, Fn&& fn) {
    const std::uint64_t mask = s.bits();
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) fn(VertexSet(sub));
}

}  // namespace mvrcg
