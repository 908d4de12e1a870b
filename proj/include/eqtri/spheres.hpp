#pragma once
// Coordinate-labeled spheres: cross-polytope boundaries, support-pattern
// bounds, the 8-vertex classification, and the exhaustive search certifying
// that 2n-vertex equivariant spheres are octahedral.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqtri/action.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/rational.hpp"

namespace eqtri {

// A point of S^{n-1} recorded by signs (and optionally magnitudes) per
// coordinate. Magnitudes act as distinguishing symbols; all pattern lemmas
// read only signs and supports.
struct SignVector {
  std::vector<int> signs;                           // entries in {-1, 0, +1}
  std::vector<std::optional<Rational>> magnitudes;  // positive when present

  int support() const;
  std::size_t size() const { return signs.size(); }
  SignVector flipped(std::size_t i) const;
  SignVector negated() const;
  // slots where the signs differ (supports assumed equal for orbit mates)
  static int sign_distance(const SignVector& a, const SignVector& b);
  std::string str() const;  // per-slot "0" or sign + magnitude, comma-joined

  bool operator==(const SignVector& o) const;
  bool operator<(const SignVector& o) const;
};

// Throws Precondition unless every entry is in {-1,0,+1}, some entry is
// nonzero, magnitudes (when present) are positive, and magnitude slots agree
// in length with the sign slots.
void validate_sign_vector(const SignVector& v);

// A complex whose vertices carry injective sign-vector labels closed under
// every coordinate flip; the flip action is attached as token permutations
// m1..mn.
struct LabeledComplex {
  Complex complex;
  std::map<VertexToken, SignVector> labels;
  GroupAction action;
  int n = 0;  // coordinate length
};

// Validates the labeling (coverage, injectivity, flip closure) and builds the
// attached action. Does not require the complex itself to be invariant; use
// is_equivariant for that.
LabeledComplex make_labeled_complex(Complex X, std::map<VertexToken, SignVector> labels);

// Boundary of the n-dimensional cross-polytope on tokens "+i"/"-i" labeled by
// +-e_i, with the full sign action.
LabeledComplex cross_polytope_sphere(int n);

// True iff every label has support <= 2. Throws Precondition unless the
// complex has exactly 2n vertices.
bool support_bound_check(const LabeledComplex& L);

// Partitions of the n coordinates into support blocks whose full sign orbits
// account for exactly 2n vertices; derived mechanically from the constraint
// sum(2^{s_i}) = 2n over partitions of n. Parts come out in {1,2} only.
std::vector<std::vector<int>> vertex_set_patterns(int n);  // parts sorted descending
long long vertex_set_choices(int n);                       // = floor(n/2) + 1

// Lower bound 2^{k-1} (2^k - k - 1) on missing edges inside the full sign
// orbit of a support-k vertex, k >= 3.
long long missing_edge_lower_bound(int k);

// Checks the bound against every realized full orbit of support >= 3.
bool verify_missing_edge_bound(const LabeledComplex& L);

// Stronger structural form: within any full orbit of support >= 3, edges of
// the complex join labels differing in exactly one sign.
bool orbit_edges_single_flip(const LabeledComplex& L);

// True iff 2^n (2n+1) > C(n+2, 2), certifying the counting obstruction; the
// claim is only asserted for n >= 2.
bool lemma33_inequality(int n);

enum class VertexSetType { I, II, III, None };
const char* vertex_set_type_name(VertexSetType t);

// Classifies the vertex set of an 8-vertex labeled 3-sphere by its support
// pattern: I = two 4-orbits, II = one 4-orbit plus two axis pairs, III = four
// axis pairs. Throws Precondition unless f0 = 8 and n = 4.
VertexSetType classify_8vertex_s3(const LabeledComplex& L);

struct SphereEnumeration {
  std::vector<LabeledComplex> survivors;  // canonical order, one per label class
  std::size_t candidates_checked = 0;
  std::size_t indeterminate = 0;  // sphere certifier gave up (expected never)
  std::size_t iso_classes = 0;    // survivors up to plain complex isomorphism
};

// Exhaustive search for Z_2^n-equivariant triangulations of S^{n-1} on
// exactly 2n vertices, assembled orbit-by-orbit under the sign action.
// support_filter=false widens the vertex-set generator to arbitrary full-orbit
// unions of the right size (used to confirm the support bound empirically).
SphereEnumeration enumerate_equivariant_spheres(int n, bool support_filter = true,
                                                int jobs = 1);

// Suspension with two new poles on coordinate n+1 and the extended action.
LabeledComplex suspension_action(const LabeledComplex& L);

}  // namespace eqtri
