#pragma once

#include <optional>

#include "eqtri/action.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/iso.hpp"

namespace eqtri {

// The link shape required for star retriangulation: a suspension of a cycle
// whose two suspension points span a missing edge of the ambient complex.
struct BipyramidShape {
  std::pair<VertexToken, VertexToken> apexes;  // in token order
  std::vector<VertexToken> base_cycle;         // canonical rotation
};

// Recognizes lk(w) as a bipyramid over a cycle.  Throws NotABipyramid when the
// link is not a 2-sphere; returns nullopt when the link is a 2-sphere but not
// a bipyramid, or when every candidate apex pair is already an edge of X.
std::optional<BipyramidShape> detect_bipyramid_link(const Complex& X, const VertexToken& w);

// Replaces st(w) = w * ({p,q} * C) by pq * C, removing vertex w.
Complex retriangulate_star(const Complex& X, const VertexToken& w, const VertexToken& p,
                           const VertexToken& q);

// Plan for gluing ast(u, left) to ast(v, right) along a link isomorphism.
// When psi is absent, all isomorphisms lk(u) -> lk(v) are enumerated and the
// first in canonical order is used (after the equivariance filter, for the
// equivariant variant).  Right-side vertices that are not identified with
// left-side ones are renamed by appending `suffix` until fresh.
struct SumPlan {
  Complex left;
  Complex right;
  VertexToken u;
  VertexToken v;
  std::optional<IsoMap> psi;
  std::string suffix = "'";
};

struct SumOutcome {
  Complex complex;
  IsoMap psi;                  // the isomorphism lk(u) -> lk(v) actually used
  bool psi_searched = false;
  std::size_t psi_survivors = 0;  // candidates after filtering, when searched
  std::map<VertexToken, VertexToken> right_rename;  // V(right)\{v} -> result tokens
};

SumOutcome star_connected_sum_full(const SumPlan& plan);
Complex star_connected_sum(const SumPlan& plan);

struct EquivariantSumOutcome {
  Complex complex;
  GroupAction action;
  IsoMap psi;
  bool psi_searched = false;
  std::size_t psi_survivors = 0;
  std::map<VertexToken, VertexToken> right_rename;
};

// Generators are paired by position; both actions must have the same rank and
// must fix u and v respectively.
EquivariantSumOutcome equivariant_connected_sum(const SumPlan& plan, const GroupAction& aK,
                                                const GroupAction& aL);

// Predicted g2 of a connected sum along lk(u, K): the general closed-n-manifold
// form and the specialization to 3-manifolds (where the link is a 2-sphere).
long long g2_connected_sum_predicted(const Complex& K, const Complex& L, const VertexToken& u);
long long g2_connected_sum_3mfld(const Complex& K, const Complex& L, const VertexToken& u);

// Upper bound on g2 of a closed 3-manifold triangulation with f0 vertices
// admitting an induced vertex link on d vertices.
long long admissible_pair_bound(long long f0, long long d);

// Survey of the bound over the inadmissibility table for 3-dimensional real
// projective space, against the published g2 floors per vertex count.
struct AdmissiblePairEntry {
  int f0 = 0;
  int d = 0;
  long long bound = 0;            // admissible_pair_bound(f0, d)
  long long published_floor = 0;  // known lower bound on g2 at this f0
  bool contradiction = false;     // bound < published_floor
  std::optional<long long> published_claim;  // set when the source states a different bound
};

std::vector<AdmissiblePairEntry> admissible_pair_survey();

// True iff the induced subcomplex on V(lk(u)) is exactly lk(u).
bool check_induced_link_condition(const Complex& X, const VertexToken& u);

}  // namespace eqtri
