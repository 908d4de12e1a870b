#pragma once
// Vertex permutations, elementary-abelian 2-group actions on complexes,
// orbits, fixed sets, and equivariance checks.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqtri/complex.hpp"

namespace eqtri {

// A permutation of vertex tokens; fixed points are implicit (only moved
// points are stored).
class Permutation {
 public:
  Permutation() = default;
  static Permutation from_map(std::map<VertexToken, VertexToken> m);
  static Permutation from_cycles(
      const std::vector<std::vector<VertexToken>>& cycles);

  const VertexToken& image(const VertexToken& v) const;
  bool moves(const VertexToken& v) const { return map_.count(v) != 0; }
  bool identity() const { return map_.empty(); }
  std::vector<VertexToken> moved() const;  // sorted

  Permutation inverse() const;
  Permutation compose(const Permutation& then) const;  // apply *this, then `then`
  bool is_involution() const;
  bool commutes_with(const Permutation& o) const;

  // Disjoint cycles, each rotated to start at its smallest token, sorted by
  // first token.
  std::vector<std::vector<VertexToken>> cycles() const;
  std::string str() const;  // "(a c)(b d)" or "id"

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::map<VertexToken, VertexToken> map_;
};

Simplex act_on_simplex(const Permutation& p, const Simplex& s);
Complex act_on_complex(const Permutation& p, const Complex& X);

struct NamedPermutation {
  std::string name;
  Permutation perm;

  bool operator==(const NamedPermutation&) const = default;
};

// A Z_2^k action presented by commuting involutions. The closure keeps one
// element per subset of an independent generator set; element names are
// products of generator names ("e" for the identity).
class GroupAction {
 public:
  GroupAction() = default;  // trivial action
  static GroupAction from_generators(std::vector<NamedPermutation> gens);

  const std::vector<NamedPermutation>& generators() const { return gens_; }
  const std::vector<NamedPermutation>& elements() const { return elements_; }
  int rank() const { return rank_; }
  long long order() const { return static_cast<long long>(elements_.size()); }

  // Drops cycles lying entirely outside `keep`; a cycle that crosses the
  // boundary raises Equivariance. Restriction notes are appended to
  // `warnings` when provided.
  GroupAction restrict_to(const std::set<VertexToken>& keep,
                          std::vector<std::string>* warnings = nullptr) const;

  bool operator==(const GroupAction&) const = default;

 private:
  std::vector<NamedPermutation> gens_;
  std::vector<NamedPermutation> elements_;
  int rank_ = 0;
};

struct EquivarianceReport {
  bool ok = true;
  // generator name and the facet whose image leaves the complex
  std::optional<std::pair<std::string, Simplex>> counterexample;
};

// Every generator must map facets to facets; the domain of the action must
// lie inside V(X).
EquivarianceReport is_equivariant(const Complex& X, const GroupAction& a);

std::vector<VertexToken> fixed_vertices(const Complex& X, const GroupAction& a);

struct OrbitPartition {
  std::vector<std::vector<VertexToken>> classes;  // each sorted; sorted by rep
  std::vector<int> stabilizer_rank;               // per class
};
OrbitPartition vertex_orbits(const Complex& X, const GroupAction& a);

// Orbits of the facet set under the closure, sorted by representative.
std::vector<std::vector<Simplex>> facet_orbits(const Complex& X,
                                               const GroupAction& a);

// Every non-fixed vertex lies in an orbit of even size (size 2^r, r >= 1).
bool nonfixed_parity_check(const Complex& X, const GroupAction& a);

}  // namespace eqtri
