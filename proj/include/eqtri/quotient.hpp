#pragma once
// Orbit-space triangulation for coordinate-embedded sphere triangulations
// under the sign action: exact rational splitting of facets along coordinate
// hyperplanes, folding into the nonnegative orthant, and deduplication into a
// triangulation of the orthant patch. Also the combinatorial facet-orbit
// count used by the catalog complexes.
//
// Everything here is exact: positions are rationals, splits compute the
// rational hyperplane crossing, dedup compares positions verbatim, and the
// complex property of the quotient is certified with exact linear programs.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqtri/action.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/rational.hpp"

namespace eqtri {

// A simplex pinned to exact coordinates: affinely independent points of a
// common ambient dimension.
struct GeometricSimplex {
  std::vector<RationalPoint> points;

  int dim() const { return static_cast<int>(points.size()) - 1; }
  std::size_t ambient_dim() const { return points.empty() ? 0 : points[0].size(); }

  // Multiset comparison after sorting; folds are compared this way.
  bool operator==(const GeometricSimplex& o) const;
  bool operator<(const GeometricSimplex& o) const;
};

// Throws Precondition on inconsistent ambient dimensions or affinely
// dependent points.
void validate_geometric_simplex(const GeometricSimplex& s);

// Gram determinant of the edge vectors from points[0]: equals (k! vol_k)^2,
// strictly positive iff the points are affinely independent. 1 for a point.
Rational gram_det(const GeometricSimplex& s);

// A complex drawn in R^m with exact vertex positions, acted on by sign flips
// of the listed coordinates (0-based). Each listed reflection must permute
// the vertex positions and be a simplicial automorphism.
struct EmbeddedComplex {
  Complex complex;
  std::map<VertexToken, RationalPoint> position;
  std::vector<int> reflections;

  std::size_t ambient_dim() const {
    return position.empty() ? 0 : position.begin()->second.size();
  }
};

// Checks all EmbeddedComplex invariants: total injective position map of
// uniform dimension, no vertex at the origin, affinely independent facets,
// reflections inducing simplicial automorphisms, and no face whose relative
// interior meets the origin unless it is an edge lying on a coordinate axis.
void validate_embedded_complex(const EmbeddedComplex& E);

// The group generated by the active reflections, as vertex permutations
// (generator i is named after its coordinate).
GroupAction embedded_action(const EmbeddedComplex& E);

GeometricSimplex positions_of(const EmbeddedComplex& E, const Simplex& s);

// Cuts a reflection-invariant simplex along x_i = 0. Requires exactly two
// vertices off the hyperplane (swapped by the reflection); the cut point is
// their exact midpoint. Returns (nonnegative half, nonpositive half); the
// coordinate flip maps one onto the other.
std::pair<GeometricSimplex, GeometricSimplex> split_simplex_by_hyperplane(
    const GeometricSimplex& s, int i);

struct FoldResult {
  GeometricSimplex simplex;
  int splits = 0;  // number of hyperplane cuts performed
};

// Repeatedly reflects or splits the facet until it lies in the closed
// nonnegative orthant of every active coordinate. The result is the image of
// the facet under coordinate-wise absolute value; it is the same for every
// facet in an orbit.
FoldResult fold_facet_full(const EmbeddedComplex& E, const Simplex& facet);
GeometricSimplex fold_facet_to_orthant(const EmbeddedComplex& E, const Simplex& facet);

struct QuotientResult {
  Complex complex;                              // over position-derived tokens
  std::map<VertexToken, RationalPoint> positions;
  long long facet_orbit_total = 0;              // orbits of the input facets
};

// Folds every facet of an embedded sphere triangulation (full sign action on
// all coordinates required) and assembles the deduplicated folds into a
// triangulation of the orthant patch. Verifies exactly: folds are constant on
// orbits, each orbit's volume accounts for its 2^m sign copies, distinct
// orbits fold to distinct simplices, and pairwise intersections of the folds
// are shared faces.
QuotientResult quotient_triangulation(const EmbeddedComplex& E, int jobs = 1);

// |s| ∩ |t| equals the convex hull of their shared vertex positions
// (certified by an exact rational linear program).
bool simplices_intersect_properly(const GeometricSimplex& s, const GeometricSimplex& t);

// Number of facet orbits of X under a; requires an equivariant action.
long long facet_orbit_count(const Complex& X, const GroupAction& a);

}  // namespace eqtri
