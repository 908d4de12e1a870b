#pragma once
// Simplicial isomorphism search and automorphism groups via backtracking
// over refinement-stable vertex classes.

#include <map>
#include <optional>
#include <vector>

#include "eqtri/action.hpp"
#include "eqtri/complex.hpp"

namespace eqtri {

using IsoMap = std::map<VertexToken, VertexToken>;

// First isomorphism under the canonical candidate ordering (vertex classes by
// refined degree invariants, tokens within a class in token order), or
// nullopt. find_isomorphism(X, X) returns the identity map.
std::optional<IsoMap> find_isomorphism(const Complex& X, const Complex& Y);

// All isomorphisms X -> Y in canonical order (empty when none).
std::vector<IsoMap> all_isomorphisms(const Complex& X, const Complex& Y);

struct AutomorphismGroup {
  long long order = 1;
  std::vector<Permutation> elements;    // canonical order, identity first
  std::vector<Permutation> generators;  // deterministic minimal-ish set
};

AutomorphismGroup automorphism_group(const Complex& X);

// True iff every closure element of `a` is an automorphism of X; checked
// against automorphism_group membership (independent of is_equivariant).
bool is_subaction(const Complex& X, const GroupAction& a);

}  // namespace eqtri
