#pragma once
// Simplicial complex kernel: vertex tokens, simplices, immutable complexes,
// face queries, local operations (link/star/antistar/induced), constructions
// (join/cone/suspension), f- and g-vectors, and closed-manifold checks.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqtri/errors.hpp"

namespace eqtri {

using VertexToken = std::string;

// Tokens are nonempty printable ASCII without whitespace or '#'.
bool valid_token(const VertexToken& t);
void require_valid_token(const VertexToken& t);

// A simplex is a strictly increasing sequence of tokens; the empty simplex
// has dimension -1.
class Simplex {
 public:
  Simplex() = default;
  static Simplex of(std::vector<VertexToken> verts);  // sorts, validates

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  const std::vector<VertexToken>& vertices() const { return verts_; }

  bool contains(const VertexToken& t) const;
  bool subset_of(const Simplex& other) const;
  Simplex with(const VertexToken& t) const;     // insert a vertex
  Simplex without(const VertexToken& t) const;  // drop a vertex
  Simplex minus(const Simplex& other) const;    // set difference
  Simplex unite(const Simplex& other) const;    // set union (overlap allowed)
  bool intersects(const Simplex& other) const;

  std::string str() const;  // tokens joined by spaces

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexToken> verts_;
};

// Immutable complex identified by its facet set (inclusion-maximal faces).
// Face tables are memoized lazily under a mutex so complexes can be shared
// across threads.
class Complex {
 public:
  Complex();  // the trivial complex {∅}

  const std::vector<Simplex>& facets() const;
  const std::vector<VertexToken>& vertices() const;
  int dim() const;     // -1 for the trivial complex
  bool pure() const;   // all facets share the top dimension
  bool trivial() const { return dim() < 0; }

  bool has_vertex(const VertexToken& t) const;
  bool contains(const Simplex& s) const;  // s is a face of some facet

  // Faces of dimension k in canonical order; {∅} for k == -1; empty for k
  // outside [-1, dim].
  const std::vector<Simplex>& faces(int k) const;
  long long face_count(int k) const;

  bool operator==(const Complex& o) const;
  bool operator!=(const Complex& o) const { return !(*this == o); }

 private:
  struct Data;
  std::shared_ptr<Data> data_;
  friend Complex complex_from_facets(const std::vector<std::vector<VertexToken>>&,
                                     std::vector<std::string>*);
  friend Complex complex_from_simplices(std::vector<Simplex>,
                                        std::vector<std::string>*);
};

// Builds a complex from candidate facets. Facets contained in another are
// absorbed with a warning pushed to `warnings` (if non-null). Duplicate
// vertices inside one facet or invalid tokens raise MalformedFacet.
Complex complex_from_facets(const std::vector<std::vector<VertexToken>>& facets,
                            std::vector<std::string>* warnings = nullptr);
Complex complex_from_simplices(std::vector<Simplex> facets,
                               std::vector<std::string>* warnings = nullptr);

struct FVector {
  // entries[0] = f_{-1} = 1, entries[k + 1] = f_k.
  std::vector<long long> entries;
  long long f(int k) const;
  int dim() const { return static_cast<int>(entries.size()) - 2; }
  bool operator==(const FVector&) const = default;
};

struct GVector {
  long long g1 = 0;
  long long g2 = 0;
  bool operator==(const GVector&) const = default;
};

FVector f_vector(const Complex& X);
// g1 = f0 - (d + 2), g2 = f1 - (d + 1) f0 + C(d + 2, 2); requires dim >= 1.
GVector g_vector(const Complex& X);

Complex link(const Complex& X, const Simplex& s);
Complex star(const Complex& X, const Simplex& s);
Complex antistar(const Complex& X, const VertexToken& v);
// Number of vertices of link(X, s).
long long degree(const Complex& X, const Simplex& s);
Complex induced(const Complex& X, const std::set<VertexToken>& S);

Complex join_complexes(const Complex& X, const Complex& Y);
Complex cone(const VertexToken& apex, const Complex& X);
// Join with two fresh apex vertices; apex tokens are derived deterministically.
Complex suspension(const Complex& X);
std::pair<VertexToken, VertexToken> suspension_apexes(const Complex& X);

struct MissingEdges {
  long long count = 0;
  std::vector<std::pair<VertexToken, VertexToken>> pairs;
};
MissingEdges missing_edges(const Complex& X);

// Closed pseudomanifold: pure, every ridge in exactly two facets, and the
// facet adjacency graph (across ridges) connected.
bool is_closed_pseudomanifold(const Complex& X);
// Pure 1-dimensional single closed cycle covering all vertices.
bool is_single_cycle(const Complex& X);
// Connected, every edge in exactly two triangles, Euler characteristic 2.
bool verify_2sphere(const Complex& X);
// Closed pseudomanifold of dim 2 whose vertex links are single cycles.
bool verify_closed_surface(const Complex& X);
// Closed pseudomanifold of dim 3 whose vertex links pass verify_2sphere.
bool verify_closed_3manifold(const Complex& X);

// True iff X = {u, v} * link(X, u) with link(X, u) == link(X, v) and the edge
// uv absent.
bool is_join_over_pair(const Complex& X, const VertexToken& u,
                       const VertexToken& v);

long long binomial(long long n, long long k);

}  // namespace eqtri
