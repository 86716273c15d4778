#pragma once

#include <convexgeo/closure.hpp>
#include <convexgeo/config.hpp>
#include <convexgeo/error.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace convexgeo {

inline constexpr int kMaxColors = 8;

// Names of the unary predicates (colors). At most kMaxColors, distinct and
// nonempty; an empty palette means no predicates.
class Palette {
public:
    Palette() = default;
    // Throws InputError on duplicate or empty names or more than kMaxColors.
    explicit Palette(std::vector<std::string> names);
    // C1, ..., Ck.
    static Palette numbered(int k);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    // -1 when absent.
    int find(const std::string& name) const;

    friend bool operator==(const Palette&, const Palette&) = default;

private:
    std::vector<std::string> names_;
};

// P(z) for every element: a bit mask over palette indices.
using ColorMask = std::uint8_t;

class ColorAssignment {
public:
    ColorAssignment() = default;
    // Every element uncolored.
    ColorAssignment(GroundSet ground, Palette palette);
    // Throws InputError when a mask uses an index outside the palette or the
    // mask count disagrees with the ground set.
    ColorAssignment(GroundSet ground, Palette palette, std::vector<ColorMask> colors);

    const GroundSet& ground() const { return ground_; }
    const Palette& palette() const { return palette_; }
    const std::vector<ColorMask>& colors() const { return colors_; }
    ColorMask colors_of(Element e) const { return colors_.at(static_cast<std::size_t>(e)); }
    // Members of one predicate.
    ESet members(int color) const;

    // Adds every element of `members` to predicate `color`.
    void paint(int color, ESet members);

    // "C1={a,b,e} C2={c,d}"; predicates with no members are listed as {}.
    std::string format() const;

    friend bool operator==(const ColorAssignment&, const ColorAssignment&) = default;

private:
    GroundSet ground_;
    Palette palette_;
    std::vector<ColorMask> colors_;
};

// S(Y) = {z : P(z) within the union of P(y), y in Y}. S(empty) holds the
// uncolored elements. Throws InputError when y is not over the ground.
ESet s_closure(const ColorAssignment& asg, ESet y);
ClosureTable s_closure_table(const ColorAssignment& asg);

// phi_S(Y) = phi(Y) intersected with S(Y). Throws InputError on mismatched
// ground sets.
ESet phi_s_closure(const ImplicationBasis& basis, const ColorAssignment& asg, ESet y);
ClosureTable phi_s_table(const ClosureTable& phi, const ColorAssignment& asg);

// Y outside `fam` such that every Z in fam has Z & Y in fam or equal to Y.
// Throws PreconditionError when y is already in fam.
bool is_quasi_closed(const ClosedFamily& fam, ESet y);

enum class AepVerdict { Guaranteed, ExtendedGuaranteed, Unknown };
std::string to_string(AepVerdict v);

// Guaranteed: every S-closed set is phi-closed, or quasi-closed with a
// one-element extension in the phi-closed sets. ExtendedGuaranteed: the new
// phi_S-closed sets (intersections of S-closed and phi-closed sets that are
// not phi-closed), taken by increasing size, are each quasi-closed with
// respect to the phi-closed sets plus those already taken, and each has a
// one-element phi-closed extension. Unknown otherwise. Throws
// PreconditionError when phi is not a convex geometry.
AepVerdict suff_aep_check(const ImplicationBasis& basis, const ColorAssignment& asg);
AepVerdict suff_aep_check(const ClosureTable& phi, const ColorAssignment& asg);

// The combined operator of a colored configuration failed anti-exchange.
class AntiExchangeFailure : public Error {
public:
    AntiExchangeFailure(const GroundSet& ground, ExchangeWitness witness);
    const ExchangeWitness& witness() const noexcept { return witness_; }

private:
    ExchangeWitness witness_;
};

struct ColoredInduction {
    ClosureTable table;                      // ch_c(Y) & S(Y)
    std::optional<ExchangeWitness> failure;  // set when anti-exchange fails
};

// Throws DegeneracyError when ch_c itself is not a convex geometry.
ColoredInduction colored_induction(const LabeledConfig& config, const ColorAssignment& asg);

// As colored_induction, but throws AntiExchangeFailure instead of reporting.
Geometry colored_induced_geometry(const LabeledConfig& config, const ColorAssignment& asg);

struct ColorSearchOptions {
    int max_colors = kMaxColors;
};

// First assignment, in lexicographic order of (P(a), P(b), ...) read as
// base-2^k digits, whose colored geometry is isomorphic to target. Palette
// C1..Ck. Throws InputError when k is negative or above the cap.
std::optional<ColorAssignment> color_search(const LabeledConfig& config, const Geometry& target, int k,
                                            const ColorSearchOptions& options = {});

}  // namespace convexgeo
