#pragma once

#include <convexgeo/colored.hpp>
#include <convexgeo/config.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convexgeo {

// A body as written in a representation file. Ellipse rotation stays in
// degrees so files round-trip exactly.
struct BodySpec {
    enum class Kind { Disk, Ellipse };
    Kind kind = Kind::Disk;
    double cx = 0;
    double cy = 0;
    double rx = 0;  // radius of a disk
    double ry = 0;
    double rot_deg = 0;

    SupportBody body() const;
    friend bool operator==(const BodySpec&, const BodySpec&) = default;
};

struct RepresentationFile {
    GroundSet ground;
    std::vector<BodySpec> bodies;            // bodies[e] belongs to element e
    std::optional<ColorAssignment> colors;   // present when any color line exists
    std::vector<Implication> expected;       // `expect` lines, in file order
    std::optional<double> tol;

    ImplicationBasis expected_basis() const { return ImplicationBasis(ground, expected); }
    friend bool operator==(const RepresentationFile&, const RepresentationFile&) = default;
};

// Grammar, one statement per line, `#` starts a comment:
//   ground: abcde
//   disk a cx cy r
//   ellipse b cx cy rx ry rot_deg
//   color C1 a b c e
//   expect abc->de        (several, comma separated, are allowed)
//   tol 1e-7
// Throws ParseError naming the line on syntax errors, unknown or duplicate
// labels, bad numbers, rx < ry, negative radii or missing bodies.
RepresentationFile parse_representation(std::string_view text);

// Canonical text: ground, bodies in label order, colors, expectations, tol.
std::string serialize(const RepresentationFile& file);

// File tol, else the CONVEXGEO_TOL environment variable, else kDefaultTol.
// Throws InputError when the environment value is not a positive number.
double resolve_tolerance(const RepresentationFile& file);

LabeledConfig to_config(const RepresentationFile& file, double tol);

struct SweepPoint {
    double tol;
    bool matches = false;  // family equals the one induced at the main tol
    std::string note;      // degeneracy or anti-exchange message, if any
};

struct VerifyReport {
    double tol = kDefaultTol;
    std::vector<TightPair> induced;  // tight implications at `tol`
    std::vector<TightPair> missing;  // tight in expected, absent from induced
    std::vector<TightPair> extra;    // tight in induced, absent from expected
    std::vector<SweepPoint> sweep;   // tol/10 and 10*tol
    std::string note;                // anti-exchange failure at `tol`, if any
    bool stable = false;
    bool pass = false;
};

// Induces the (colored) geometry at the resolved tolerance, compares its
// closed-set family to the one of the expected implications and reruns at
// tol/10 and 10*tol. Throws DegeneracyError, with the tolerance in the
// message, when ch_c is degenerate at the main tolerance.
VerifyReport verify(const RepresentationFile& file);

std::string format_report(const GroundSet& ground, const VerifyReport& report);

}  // namespace convexgeo
