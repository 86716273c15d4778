#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace convexgeo {

inline constexpr int kMaxGround = 16;

using Element = int;

// Subset of a ground set of at most 16 elements, stored as a bit mask.
// Element i is present iff bit i is set.
class ESet {
public:
    constexpr ESet() = default;
    constexpr explicit ESet(std::uint32_t bits) : bits_(bits) {}

    static constexpr ESet single(Element e) { return ESet(1u << e); }
    static constexpr ESet full(int n) { return ESet(n >= 32 ? ~0u : ((1u << n) - 1u)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
    constexpr bool subset_of(ESet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(ESet other) const { return subset_of(other) && bits_ != other.bits_; }

    constexpr ESet with(Element e) const { return ESet(bits_ | (1u << e)); }
    constexpr ESet without(Element e) const { return ESet(bits_ & ~(1u << e)); }

    // Lowest element; undefined on the empty set.
    constexpr Element first() const { return std::countr_zero(bits_); }

    friend constexpr ESet operator|(ESet a, ESet b) { return ESet(a.bits_ | b.bits_); }
    friend constexpr ESet operator&(ESet a, ESet b) { return ESet(a.bits_ & b.bits_); }
    friend constexpr ESet operator-(ESet a, ESet b) { return ESet(a.bits_ & ~b.bits_); }
    ESet& operator|=(ESet o) { bits_ |= o.bits_; return *this; }
    ESet& operator&=(ESet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(ESet, ESet) = default;
    friend constexpr auto operator<=>(ESet a, ESet b) { return a.bits_ <=> b.bits_; }

    // Iteration over members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
        constexpr Element operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint32_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint32_t bits_ = 0;
};

// Ordered, labeled base set. Labels are single printable characters.
class GroundSet {
public:
    GroundSet() = default;
    // Throws InputError on duplicate, whitespace or reserved labels, or size
    // outside 1..16.
    explicit GroundSet(std::string labels);

    // First n letters of the alphabet.
    static GroundSet letters(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& labels() const { return labels_; }
    char label(Element e) const { return labels_.at(static_cast<std::size_t>(e)); }
    ESet full() const { return ESet::full(size()); }
    std::uint32_t subset_count() const { return 1u << size(); }

    // -1 when the label is not part of the ground set.
    Element find(char label) const;
    // Throws InputError for unknown labels.
    Element index_of(char label) const;

    // "abd"; "" for the empty set.
    std::string format(ESet s) const;
    // Accepts label strings such as "abd"; "" or "0" denote the empty set.
    ESet parse(std::string_view text) const;

    bool contains(ESet s) const { return s.subset_of(full()); }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::string labels_;
};

}  // namespace convexgeo
