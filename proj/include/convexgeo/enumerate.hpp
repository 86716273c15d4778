#pragma once

#include <convexgeo/closure.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace convexgeo {

// perm[i] is the new index of element i.
using Permutation = std::vector<Element>;

ESet apply_permutation(const Permutation& perm, ESet s);
ClosedFamily apply_permutation(const Permutation& perm, const ClosedFamily& family);

// Minimum, over all n! relabelings, of the sorted mask list. Serialized as
// one byte n followed by each mask as two little-endian bytes. Two
// geometries are isomorphic iff their forms are equal.
using CanonicalForm = std::vector<std::uint8_t>;

CanonicalForm canonical_form(const ClosedFamily& family);
CanonicalForm canonical_form(const Geometry& g);
// The family relabeled into its canonical labeling.
ClosedFamily canonical_family(const ClosedFamily& family);

// Printable id of a canonical form: "g<n>-" followed by the masks in hex.
std::string canonical_id(const CanonicalForm& form);

struct EnumerateOptions {
    int max_n = 5;  // resource guard; n = 6 has ~1.3e8 labeled geometries
};

struct EnumerationResult {
    std::vector<Geometry> geometries;  // canonical labeling, by size then masks
    std::uint64_t labeled_count = 0;   // convex geometries before isomorph rejection
};

// Every convex geometry on n elements, once per isomorphism class. Throws
// ResourceError when n exceeds options.max_n.
EnumerationResult enumerate_geometries_with_stats(int n, const EnumerateOptions& options = {});
std::vector<Geometry> enumerate_geometries(int n, const EnumerateOptions& options = {});

// Closed sets with exactly one upper cover in the closed-set lattice.
std::vector<ESet> meet_irreducibles(const ClosedFamily& family);

// Width of a finite poset ordered by strict inclusion (Dilworth, via a
// maximum bipartite matching on the comparability graph).
int inclusion_width(const std::vector<ESet>& elements);

// Width of the meet-irreducible poset.
int convex_dimension(const Geometry& g);

}  // namespace convexgeo
