#pragma once

#include <convexgeo/eset.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convexgeo {

// premise -> conclusion. Constructed through `make`, which strips premise
// elements from the conclusion.
struct Implication {
    ESet premise;
    ESet conclusion;

    // Returns nullopt when the normalized conclusion is empty. Throws
    // InputError when the premise is empty.
    static std::optional<Implication> make(ESet premise, ESet conclusion);

    friend bool operator==(const Implication&, const Implication&) = default;
    friend auto operator<=>(const Implication&, const Implication&) = default;
};

class ImplicationBasis {
public:
    ImplicationBasis() = default;
    explicit ImplicationBasis(GroundSet ground) : ground_(std::move(ground)) {}
    ImplicationBasis(GroundSet ground, std::vector<Implication> imps);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Implication>& implications() const& { return imps_; }
    std::vector<Implication> implications() && { return std::move(imps_); }

    // Normalizes and appends; trivial implications are dropped.
    void add(ESet premise, ESet conclusion);
    // Parses "bcd->e" (or "bcd→e") and appends it.
    void add(std::string_view text);

private:
    GroundSet ground_;
    std::vector<Implication> imps_;
};

// "abc->de" grammar; letters must be ground labels.
Implication parse_implication(const GroundSet& ground, std::string_view text);
std::string format_implication(const GroundSet& ground, const Implication& imp);

// Several implications separated by commas and/or whitespace, e.g.
// "abc->de, bc->e, a->e".
ImplicationBasis parse_implication_list(const GroundSet& ground, std::string_view text);

// Basis file: first significant line `ground: abcde`, then one implication
// per line; `#` starts a comment.
ImplicationBasis parse_basis_file(std::string_view text);
std::string serialize_basis_file(const ImplicationBasis& basis);

// Forward-chaining closure. Throws InputError when y is not over the ground.
ESet closure(const ImplicationBasis& basis, ESet y);

// Lexicographically (by mask value) sorted, duplicate-free list of subsets.
class ClosedFamily {
public:
    ClosedFamily() = default;
    ClosedFamily(GroundSet ground, std::vector<ESet> sets);

    const GroundSet& ground() const { return ground_; }
    const std::vector<ESet>& sets() const& { return sets_; }
    // By value on temporaries, so `for (ESet s : f().sets())` stays valid.
    std::vector<ESet> sets() && { return std::move(sets_); }
    std::size_t size() const { return sets_.size(); }
    bool contains(ESet s) const;

    friend bool operator==(const ClosedFamily&, const ClosedFamily&) = default;

private:
    GroundSet ground_;
    std::vector<ESet> sets_;
};

// Closure operator materialized over all 2^n subsets. Every query-heavy
// algorithm (tightness, anti-exchange, obstruction search) works on this.
class ClosureTable {
public:
    ClosureTable() = default;
    explicit ClosureTable(const ImplicationBasis& basis);
    // cl(Y) = intersection of the members of `family` containing Y. The
    // family must contain the full set.
    explicit ClosureTable(const ClosedFamily& family);
    ClosureTable(GroundSet ground, std::vector<ESet> table);

    const GroundSet& ground() const { return ground_; }
    ESet close(ESet y) const { return table_[y.bits()]; }
    bool implies(ESet premise, Element u) const { return close(premise).contains(u); }
    bool is_closed(ESet y) const { return close(y) == y; }
    ClosedFamily closed_sets() const;
    const std::vector<ESet>& table() const& { return table_; }
    std::vector<ESet> table() && { return std::move(table_); }

    friend bool operator==(const ClosureTable&, const ClosureTable&) = default;

private:
    GroundSet ground_;
    std::vector<ESet> table_;
};

// Convex geometry: an alignment with the empty set and one-point extensions.
class Geometry {
public:
    // Throws PreconditionError when `family` is not a convex geometry.
    explicit Geometry(ClosedFamily family);
    static Geometry from_basis(const ImplicationBasis& basis);

    const ClosedFamily& family() const { return family_; }
    const GroundSet& ground() const { return family_.ground(); }
    ClosureTable closure_table() const { return ClosureTable(family_); }

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    ClosedFamily family_;
};

ClosedFamily all_closed(const ImplicationBasis& basis);

bool is_alignment(const ClosedFamily& family);
bool is_convex_geometry(const ClosedFamily& family);

// A witness that the anti-exchange property fails: Y closed, x != y outside
// Y, x in cl(Y+y) and y in cl(Y+x).
struct ExchangeWitness {
    ESet closed;
    Element x;
    Element y;
};
std::optional<ExchangeWitness> find_exchange(const ClosureTable& table);

// Throws PreconditionError when closure(empty) is nonempty.
bool has_anti_exchange(const ImplicationBasis& basis);
bool has_anti_exchange(const ClosureTable& table);

// Throws NotAnImplicationError when u is not in cl(premise) \ premise.
bool is_tight(const ClosureTable& table, ESet premise, Element u);
bool is_tight(const ImplicationBasis& basis, ESet premise, Element u);

// One (minimal premise, single element) pair per tight implication; sorted
// by premise size, premise mask, element.
using TightPair = std::pair<ESet, Element>;
std::vector<TightPair> tight_implications(const ClosureTable& table);
std::vector<TightPair> tight_implications(const ImplicationBasis& basis);

// Tight pairs as a basis, one single-element conclusion per implication.
ImplicationBasis tight_basis(const ClosureTable& table);

// "a->e, bc->de": pairs sharing a premise are merged for display.
std::string format_tight(const GroundSet& ground, const std::vector<TightPair>& pairs);

}  // namespace convexgeo
