#include "eqtri/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "eqtri/bistellar.hpp"

namespace eqtri {

namespace {

std::vector<RationalPoint> sorted_points(const GeometricSimplex& s) {
  auto pts = s.points;
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

bool GeometricSimplex::operator==(const GeometricSimplex& o) const {
  return sorted_points(*this) == sorted_points(o);
}

bool GeometricSimplex::operator<(const GeometricSimplex& o) const {
  return sorted_points(*this) < sorted_points(o);
}

Rational gram_det(const GeometricSimplex& s) {
  const std::size_t k = s.points.size() - 1;
  std::vector<std::vector<Rational>> G(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rational dot = 0;
      for (std::size_t d = 0; d < s.points[0].size(); ++d)
        dot += (s.points[a + 1][d] - s.points[0][d]) * (s.points[b + 1][d] - s.points[0][d]);
      G[a][b] = G[b][a] = dot;
    }
  // determinant by Gaussian elimination
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && G[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(G[piv], G[col]);
      det = -det;
    }
    det *= G[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (G[r][col] == 0) continue;
      Rational f = G[r][col] / G[col][col];
      for (std::size_t c = col; c < k; ++c) G[r][c] -= f * G[col][c];
    }
  }
  return det;
}

void validate_geometric_simplex(const GeometricSimplex& s) {
  if (s.points.empty())
    throw Error(ErrorKind::Precondition, "geometric simplex has no points");
  for (const auto& p : s.points)
    if (p.size() != s.points[0].size() || p.empty())
      throw Error(ErrorKind::Precondition, "inconsistent ambient dimensions");
  if (gram_det(s) == 0)
    throw Error(ErrorKind::Precondition, "points are affinely dependent");
}

// ---------------------------------------------------------------------------
// exact linear algebra

namespace {

// Unique solution of A x = b for A with independent columns; nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows)
      throw Error(ErrorKind::Precondition, "columns are not independent");
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || A[q][c] == 0) continue;
      Rational f = A[q][c] / A[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) A[q][cc] -= f * A[r][cc];
      b[q] -= f * b[r];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]] / A[pivot_row[c]][c];
  return x;
}

struct LpResult {
  bool feasible = false;
  Rational value;
};

// max c.x subject to A x = b, x >= 0; two-phase dense simplex with Bland's
// rule. The feasible sets used here are products of barycentric simplices, so
// the program is always bounded.
LpResult lp_maximize(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     const std::vector<Rational>& c) {
  const std::size_t rows = A.size();
  const std::size_t n = c.size();
  for (std::size_t r = 0; r < rows; ++r)
    if (b[r] < 0) {
      for (auto& x : A[r]) x = -x;
      b[r] = -b[r];
    }
  // tableau with artificial columns n..n+rows-1
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(n + rows + 1));
  std::vector<int> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t cc = 0; cc < n; ++cc) T[r][cc] = A[r][cc];
    T[r][n + r] = 1;
    T[r][n + rows] = b[r];
    basis[r] = static_cast<int>(n + r);
  }
  const std::size_t rhs = n + rows;
  auto pivot = [&](std::size_t pr, std::size_t pc) {
    Rational d = T[pr][pc];
    for (auto& x : T[pr]) x /= d;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || T[r][pc] == 0) continue;
      Rational f = T[r][pc];
      for (std::size_t cc = 0; cc <= rhs; ++cc) T[r][cc] -= f * T[pr][cc];
    }
    basis[pr] = static_cast<int>(pc);
  };
  auto run = [&](const std::vector<Rational>& obj, std::size_t ncols) {
    for (;;) {
      // reduced costs under Bland's rule
      std::size_t enter = ncols;
      for (std::size_t cc = 0; cc < ncols && enter == ncols; ++cc) {
        Rational rc = obj[cc];
        for (std::size_t r = 0; r < rows; ++r) rc -= obj[basis[r]] * T[r][cc];
        if (rc > 0) enter = cc;
      }
      if (enter == ncols) break;
      std::size_t leave = rows;
      for (std::size_t r = 0; r < rows; ++r) {
        if (T[r][enter] <= 0) continue;
        if (leave == rows) {
          leave = r;
          continue;
        }
        Rational lhs = T[r][rhs] * T[leave][enter];
        Rational rhsv = T[leave][rhs] * T[r][enter];
        if (lhs < rhsv || (lhs == rhsv && basis[r] < basis[leave])) leave = r;
      }
      if (leave == rows)
        throw Error(ErrorKind::Precondition, "linear program is unbounded");
      pivot(leave, enter);
    }
    Rational v = 0;
    for (std::size_t r = 0; r < rows; ++r) v += obj[basis[r]] * T[r][rhs];
    return v;
  };
  std::vector<Rational> phase1(n + rows, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) phase1[n + r] = -1;
  if (run(phase1, n + rows) < 0) return {false, 0};
  // drive surviving artificials out of the basis
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < static_cast<int>(n)) continue;
    std::size_t cc = 0;
    while (cc < n && T[r][cc] == 0) ++cc;
    if (cc < n) pivot(r, cc);
    // else the row is 0 = 0 and stays parked on its artificial
  }
  std::vector<Rational> phase2(n + rows, Rational(0));
  for (std::size_t cc = 0; cc < n; ++cc) phase2[cc] = c[cc];
  return {true, run(phase2, n)};
}

}  // namespace

bool simplices_intersect_properly(const GeometricSimplex& s, const GeometricSimplex& t) {
  validate_geometric_simplex(s);
  validate_geometric_simplex(t);
  if (s.points[0].size() != t.points[0].size())
    throw Error(ErrorKind::Precondition, "simplices live in different ambient spaces");
  const std::size_t m = s.points[0].size();
  const std::size_t a = s.points.size(), bn = t.points.size();
  std::set<RationalPoint> sp(s.points.begin(), s.points.end());
  std::set<RationalPoint> tp(t.points.begin(), t.points.end());
  std::vector<std::vector<Rational>> A(m + 2, std::vector<Rational>(a + bn, Rational(0)));
  std::vector<Rational> b(m + 2, Rational(0));
  for (std::size_t d = 0; d < m; ++d) {
    for (std::size_t i = 0; i < a; ++i) A[d][i] = s.points[i][d];
    for (std::size_t j = 0; j < bn; ++j) A[d][a + j] = -t.points[j][d];
  }
  for (std::size_t i = 0; i < a; ++i) A[m][i] = 1;
  for (std::size_t j = 0; j < bn; ++j) A[m + 1][a + j] = 1;
  b[m] = 1;
  b[m + 1] = 1;
  std::vector<Rational> c(a + bn, Rational(0));
  for (std::size_t i = 0; i < a; ++i)
    if (!tp.count(s.points[i])) c[i] = 1;
  for (std::size_t j = 0; j < bn; ++j)
    if (!sp.count(t.points[j])) c[a + j] = 1;
  LpResult lp = lp_maximize(std::move(A), std::move(b), c);
  return !lp.feasible || lp.value == 0;
}

// ---------------------------------------------------------------------------
// embedded complexes

GeometricSimplex positions_of(const EmbeddedComplex& E, const Simplex& s) {
  GeometricSimplex g;
  for (const auto& v : s.vertices()) {
    auto it = E.position.find(v);
    if (it == E.position.end())
      throw Error(ErrorKind::UnknownVertex, "no position for vertex '" + v + "'");
    g.points.push_back(it->second);
  }
  return g;
}

namespace {

RationalPoint flipped_point(RationalPoint p, int i) {
  p[i] = -p[i];
  return p;
}

bool setwise_flip_invariant(const GeometricSimplex& s, int i) {
  std::multiset<RationalPoint> a(s.points.begin(), s.points.end()), b;
  for (const auto& p : s.points) b.insert(flipped_point(p, i));
  return a == b;
}

int point_support(const RationalPoint& p) {
  int k = 0;
  for (const auto& x : p) k += (x != 0);
  return k;
}

}  // namespace

void validate_embedded_complex(const EmbeddedComplex& E) {
  const auto& verts = E.complex.vertices();
  if (verts.empty()) throw Error(ErrorKind::Precondition, "embedded complex has no vertices");
  const std::size_t m = E.ambient_dim();
  if (m == 0) throw Error(ErrorKind::Precondition, "ambient dimension is zero");
  if (E.position.size() != verts.size())
    throw Error(ErrorKind::Precondition, "position table and vertex set differ");
  std::map<RationalPoint, VertexToken> by_pos;
  for (const auto& v : verts) {
    auto it = E.position.find(v);
    if (it == E.position.end())
      throw Error(ErrorKind::Precondition, "vertex '" + v + "' has no position");
    if (it->second.size() != m)
      throw Error(ErrorKind::Precondition, "positions of mixed dimension");
    if (point_support(it->second) == 0)
      throw Error(ErrorKind::Precondition, "vertex '" + v + "' sits at the origin");
    if (!by_pos.emplace(it->second, v).second)
      throw Error(ErrorKind::Precondition, "two vertices share the position of '" + v + "'");
  }
  std::set<int> seen;
  for (int i : E.reflections) {
    if (i < 0 || i >= static_cast<int>(m))
      throw Error(ErrorKind::Range, "reflection index out of range");
    if (!seen.insert(i).second)
      throw Error(ErrorKind::Precondition, "duplicate reflection index");
  }
  for (const auto& f : E.complex.facets()) validate_geometric_simplex(positions_of(E, f));
  // each reflection must permute the vertices and map facets to facets
  std::set<Simplex> facet_set(E.complex.facets().begin(), E.complex.facets().end());
  for (int i : E.reflections) {
    std::map<VertexToken, VertexToken> img;
    for (const auto& v : verts) {
      auto it = by_pos.find(flipped_point(E.position.at(v), i));
      if (it == by_pos.end())
        throw Error(ErrorKind::Equivariance,
                    "reflection of coordinate " + std::to_string(i + 1) +
                        " does not permute the vertex positions");
      img[v] = it->second;
    }
    for (const auto& f : E.complex.facets()) {
      std::vector<VertexToken> mapped;
      for (const auto& v : f.vertices()) mapped.push_back(img.at(v));
      if (!facet_set.count(Simplex::of(mapped)))
        throw Error(ErrorKind::Equivariance,
                    "reflection of coordinate " + std::to_string(i + 1) +
                        " is not a simplicial automorphism");
    }
  }
  // no face's relative interior may meet the origin, except an axis edge
  std::set<Simplex> checked;
  for (const auto& f : E.complex.facets()) {
    const auto& fv = f.vertices();
    for (std::size_t mask = 1; mask < (1ull << fv.size()); ++mask) {
      if (!(mask & (mask - 1))) continue;  // singletons handled above
      std::vector<VertexToken> sub;
      for (std::size_t bpos = 0; bpos < fv.size(); ++bpos)
        if ((mask >> bpos) & 1) sub.push_back(fv[bpos]);
      Simplex face = Simplex::of(sub);
      if (!checked.insert(face).second) continue;
      const std::size_t k = face.size();
      std::vector<std::vector<Rational>> A(m + 1, std::vector<Rational>(k, Rational(0)));
      std::vector<Rational> rhsv(m + 1, Rational(0));
      for (std::size_t c = 0; c < k; ++c) {
        const auto& p = E.position.at(face.vertices()[c]);
        for (std::size_t d = 0; d < m; ++d) A[d][c] = p[d];
        A[m][c] = 1;
      }
      rhsv[m] = 1;
      auto lambda = solve_unique(std::move(A), std::move(rhsv));
      if (!lambda) continue;
      bool interior = true;
      for (const auto& l : *lambda) interior = interior && l > 0;
      if (!interior) continue;
      bool axis_edge = false;
      if (k == 2) {
        const auto& p = E.position.at(face.vertices()[0]);
        const auto& q = E.position.at(face.vertices()[1]);
        axis_edge = point_support(p) == 1 && point_support(q) == 1;
        if (axis_edge)
          for (std::size_t d = 0; d < m; ++d)
            if ((p[d] != 0) != (q[d] != 0)) axis_edge = false;
      }
      if (!axis_edge)
        throw Error(ErrorKind::Geometry,
                    "relative interior of face {" + face.str() + "} meets the origin");
    }
  }
}

GroupAction embedded_action(const EmbeddedComplex& E) {
  std::map<RationalPoint, VertexToken> by_pos;
  for (const auto& [v, p] : E.position) by_pos.emplace(p, v);
  std::vector<int> refl = E.reflections;
  std::sort(refl.begin(), refl.end());
  std::vector<NamedPermutation> gens;
  for (int i : refl) {
    std::map<VertexToken, VertexToken> img;
    for (const auto& [v, p] : E.position) {
      auto it = by_pos.find(flipped_point(p, i));
      if (it == by_pos.end())
        throw Error(ErrorKind::Equivariance,
                    "reflection of coordinate " + std::to_string(i + 1) +
                        " does not permute the vertex positions");
      if (it->second != v) img[v] = it->second;
    }
    gens.push_back({"m" + std::to_string(i + 1), Permutation::from_map(std::move(img))});
  }
  return GroupAction::from_generators(std::move(gens));
}

std::pair<GeometricSimplex, GeometricSimplex> split_simplex_by_hyperplane(
    const GeometricSimplex& s, int i) {
  validate_geometric_simplex(s);
  if (i < 0 || i >= static_cast<int>(s.points[0].size()))
    throw Error(ErrorKind::Range, "hyperplane coordinate out of range");
  if (!setwise_flip_invariant(s, i))
    throw Error(ErrorKind::Equivariance,
                "simplex is not invariant under reflection of coordinate " +
                    std::to_string(i + 1));
  std::vector<std::size_t> off;
  for (std::size_t v = 0; v < s.points.size(); ++v)
    if (s.points[v][i] != 0) off.push_back(v);
  if (off.size() != 2)
    throw Error(ErrorKind::Geometry,
                "hyperplane split needs exactly two vertices off x_" +
                    std::to_string(i + 1) + " = 0, found " + std::to_string(off.size()));
  std::size_t u = off[0], v = off[1];
  if (s.points[u][i] < 0) std::swap(u, v);
  RationalPoint mid(s.points[0].size());
  for (std::size_t d = 0; d < mid.size(); ++d)
    mid[d] = (s.points[u][d] + s.points[v][d]) / 2;
  GeometricSimplex pos = s, neg = s;
  pos.points[v] = mid;
  neg.points[u] = mid;
  validate_geometric_simplex(pos);
  validate_geometric_simplex(neg);
  return {pos, neg};
}

namespace {

FoldResult fold_positions(GeometricSimplex g, const std::vector<int>& refl) {
  FoldResult out;
  int guard = 0;
  for (;;) {
    if (++guard > static_cast<int>(refl.size()) + 2)
      throw Error(ErrorKind::Geometry, "folding failed to terminate");
    bool acted = false;
    for (int i : refl) {
      bool has_neg = false, has_pos = false;
      for (const auto& p : g.points) {
        has_neg = has_neg || p[i] < 0;
        has_pos = has_pos || p[i] > 0;
      }
      if (!has_neg) continue;
      if (!has_pos) {
        for (auto& p : g.points) p[i] = -p[i];
      } else {
        if (!setwise_flip_invariant(g, i))
          throw Error(ErrorKind::Geometry,
                      "facet crosses x_" + std::to_string(i + 1) +
                          " = 0 without reflection symmetry; the embedding is not an "
                          "equivariant triangulation");
        g = split_simplex_by_hyperplane(g, i).first;
        ++out.splits;
      }
      acted = true;
      break;
    }
    if (!acted) break;
  }
  out.simplex = std::move(g);
  return out;
}

std::vector<int> sorted_reflections(const EmbeddedComplex& E) {
  std::vector<int> refl = E.reflections;
  std::sort(refl.begin(), refl.end());
  return refl;
}

void require_facet(const EmbeddedComplex& E, const Simplex& facet) {
  const auto& fs = E.complex.facets();
  if (!std::binary_search(fs.begin(), fs.end(), facet))
    throw Error(ErrorKind::Precondition, "{" + facet.str() + "} is not a facet");
}

}  // namespace

FoldResult fold_facet_full(const EmbeddedComplex& E, const Simplex& facet) {
  validate_embedded_complex(E);
  require_facet(E, facet);
  return fold_positions(positions_of(E, facet), sorted_reflections(E));
}

GeometricSimplex fold_facet_to_orthant(const EmbeddedComplex& E, const Simplex& facet) {
  return fold_facet_full(E, facet).simplex;
}

QuotientResult quotient_triangulation(const EmbeddedComplex& E, int jobs) {
  validate_embedded_complex(E);
  const std::size_t m = E.ambient_dim();
  std::vector<int> refl = sorted_reflections(E);
  for (std::size_t i = 0; i < m; ++i)
    if (i >= refl.size() || refl[i] != static_cast<int>(i))
      throw Error(ErrorKind::Precondition,
                  "quotient needs the full sign action on all coordinates");
  const int d = E.complex.dim();
  if (d != static_cast<int>(m) - 1)
    throw Error(ErrorKind::Precondition, "carrier dimension must be ambient minus one");
  if (d == 0) {
    if (E.complex.vertices().size() != 2 || E.complex.facets().size() != 2)
      throw Error(ErrorKind::Precondition, "not a 0-sphere");
  } else if (d <= 3) {
    switch (certify_sphere(E.complex)) {
      case SphereVerdict::Yes: break;
      case SphereVerdict::No:
        throw Error(ErrorKind::Precondition, "carrier is not a sphere");
      case SphereVerdict::Indeterminate:
        throw Error(ErrorKind::Precondition, "sphere certification ran out of budget");
    }
  } else {
    throw Error(ErrorKind::Precondition, "quotient supports spheres of dimension <= 3");
  }

  GroupAction action = embedded_action(E);
  std::vector<std::vector<Simplex>> orbits = facet_orbits(E.complex, action);

  std::vector<const Simplex*> tasks;
  std::vector<std::pair<std::size_t, std::size_t>> task_pos;  // orbit, member
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t i = 0; i < orbits[o].size(); ++i) {
      tasks.push_back(&orbits[o][i]);
      task_pos.emplace_back(o, i);
    }
  std::vector<FoldResult> folds(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto run_task = [&](std::size_t t) {
    try {
      folds[t] = fold_positions(positions_of(E, *tasks[t]), refl);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (jobs <= 1 || tasks.size() < 2) {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&]() {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
          run_task(t);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<FoldResult> orbit_fold(orbits.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto [o, i] = task_pos[t];
    if (i == 0) {
      orbit_fold[o] = folds[t];
    } else if (!(folds[t].simplex == orbit_fold[o].simplex) ||
               folds[t].splits != orbit_fold[o].splits) {
      throw Error(ErrorKind::Geometry, "fold is not constant on a facet orbit");
    }
  }

  std::map<GeometricSimplex, std::size_t> fold_owner;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const FoldResult& fr = orbit_fold[o];
    if (orbits[o].size() << fr.splits != (1ull << m))
      throw Error(ErrorKind::NonComplex,
                  "orbit of {" + orbits[o][0].str() + "} does not account for all 2^m sign copies");
    Rational scale = 1;
    for (int s = 0; s < fr.splits; ++s) scale *= 4;
    if (gram_det(positions_of(E, orbits[o][0])) != scale * gram_det(fr.simplex))
      throw Error(ErrorKind::Geometry, "split volume accounting failed");
    auto [it, fresh] = fold_owner.emplace(fr.simplex, o);
    if (!fresh)
      throw Error(ErrorKind::NonComplex, "distinct facet orbits fold onto the same simplex");
  }

  QuotientResult out;
  out.facet_orbit_total = static_cast<long long>(orbits.size());
  std::vector<Simplex> facets;
  for (const auto& fr : orbit_fold) {
    std::vector<VertexToken> toks;
    for (const auto& p : fr.simplex.points) {
      VertexToken tok = format_point(p);
      out.positions.emplace(tok, p);
      toks.push_back(tok);
    }
    facets.push_back(Simplex::of(toks));
  }
  out.complex = complex_from_simplices(facets);
  if (out.complex.facets().size() != orbits.size())
    throw Error(ErrorKind::NonComplex, "folded simplices collapse into each other");
  for (std::size_t a = 0; a < orbit_fold.size(); ++a)
    for (std::size_t b = a + 1; b < orbit_fold.size(); ++b)
      if (!simplices_intersect_properly(orbit_fold[a].simplex, orbit_fold[b].simplex))
        throw Error(ErrorKind::NonComplex,
                    "folded simplices do not meet along shared faces");
  return out;
}

long long facet_orbit_count(const Complex& X, const GroupAction& a) {
  if (auto rep = is_equivariant(X, a); !rep.ok)
    throw Error(ErrorKind::Precondition,
                "the action is not a group of simplicial automorphisms");
  return static_cast<long long>(facet_orbits(X, a).size());
}

}  // namespace eqtri
