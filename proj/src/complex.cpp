#include "eqtri/complex.hpp"

#include <algorithm>
#include <numeric>

namespace eqtri {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedFacet: return "malformed-facet";
    case ErrorKind::AbsentFace: return "absent-face";
    case ErrorKind::UnknownVertex: return "unknown-vertex";
    case ErrorKind::VertexOverlap: return "vertex-overlap";
    case ErrorKind::Purity: return "purity";
    case ErrorKind::Involution: return "involution";
    case ErrorKind::Commutativity: return "commutativity";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotABipyramid: return "not-a-bipyramid";
    case ErrorKind::ApexEdgePresent: return "apex-edge-present";
    case ErrorKind::InducedLink: return "induced-link";
    case ErrorKind::IsoMismatch: return "iso-mismatch";
    case ErrorKind::FixedVertex: return "fixed-vertex";
    case ErrorKind::Equivariance: return "equivariance";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::NonComplex: return "non-complex";
    case ErrorKind::Range: return "range";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

bool valid_token(const VertexToken& t) {
  if (t.empty()) return false;
  for (unsigned char c : t) {
    if (c <= 0x20 || c >= 0x7f || c == '#') return false;
  }
  return true;
}

void require_valid_token(const VertexToken& t) {
  if (!valid_token(t))
    throw Error(ErrorKind::MalformedFacet, "invalid vertex token '" + t + "'");
}

Simplex Simplex::of(std::vector<VertexToken> verts) {
  for (const auto& v : verts) require_valid_token(v);
  std::sort(verts.begin(), verts.end());
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (verts[i] == verts[i - 1])
      throw Error(ErrorKind::MalformedFacet,
                  "duplicate vertex '" + verts[i] + "' in one facet");
  }
  Simplex s;
  s.verts_ = std::move(verts);
  return s;
}

bool Simplex::contains(const VertexToken& t) const {
  return std::binary_search(verts_.begin(), verts_.end(), t);
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(),
                       verts_.begin(), verts_.end());
}

Simplex Simplex::with(const VertexToken& t) const {
  if (contains(t)) return *this;
  Simplex s = *this;
  s.verts_.insert(std::upper_bound(s.verts_.begin(), s.verts_.end(), t), t);
  return s;
}

Simplex Simplex::without(const VertexToken& t) const {
  Simplex s;
  s.verts_.reserve(verts_.size());
  for (const auto& v : verts_)
    if (v != t) s.verts_.push_back(v);
  return s;
}

Simplex Simplex::minus(const Simplex& other) const {
  Simplex s;
  std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(),
                      other.verts_.end(), std::back_inserter(s.verts_));
  return s;
}

Simplex Simplex::unite(const Simplex& other) const {
  Simplex s;
  std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(),
                 other.verts_.end(), std::back_inserter(s.verts_));
  return s;
}

bool Simplex::intersects(const Simplex& other) const {
  auto i = verts_.begin();
  auto j = other.verts_.begin();
  while (i != verts_.end() && j != other.verts_.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::string Simplex::str() const {
  std::string out;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) out += ' ';
    out += verts_[i];
  }
  return out;
}

struct Complex::Data {
  std::vector<Simplex> facets;        // sorted, inclusion-maximal
  std::vector<VertexToken> vertices;  // sorted
  int dim = -1;
  bool pure = true;
  mutable std::mutex mu;
  mutable std::map<int, std::vector<Simplex>> face_cache;
};

Complex::Complex() : data_(std::make_shared<Data>()) {
  data_->facets.push_back(Simplex());
}

const std::vector<Simplex>& Complex::facets() const { return data_->facets; }
const std::vector<VertexToken>& Complex::vertices() const {
  return data_->vertices;
}
int Complex::dim() const { return data_->dim; }
bool Complex::pure() const { return data_->pure; }

bool Complex::has_vertex(const VertexToken& t) const {
  return std::binary_search(data_->vertices.begin(), data_->vertices.end(), t);
}

bool Complex::contains(const Simplex& s) const {
  for (const auto& f : data_->facets)
    if (s.subset_of(f)) return true;
  return false;
}

const std::vector<Simplex>& Complex::faces(int k) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  auto it = data_->face_cache.find(k);
  if (it != data_->face_cache.end()) return it->second;
  std::set<Simplex> out;
  if (k == -1) {
    out.insert(Simplex());
  } else if (k >= 0 && k <= data_->dim) {
    // enumerate (k+1)-subsets of each facet
    for (const auto& f : data_->facets) {
      int n = static_cast<int>(f.size());
      if (n < k + 1) continue;
      std::vector<int> idx(k + 1);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<VertexToken> sub;
        sub.reserve(k + 1);
        for (int i : idx) sub.push_back(f.vertices()[i]);
        out.insert(Simplex::of(std::move(sub)));
        int pos = k;
        while (pos >= 0 && idx[pos] == n - (k + 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  auto& slot = data_->face_cache[k];
  slot.assign(out.begin(), out.end());
  return slot;
}

long long Complex::face_count(int k) const {
  return static_cast<long long>(faces(k).size());
}

bool Complex::operator==(const Complex& o) const {
  return data_ == o.data_ || data_->facets == o.data_->facets;
}

Complex complex_from_simplices(std::vector<Simplex> facets,
                               std::vector<std::string>* warnings) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // absorb facets contained in another
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].subset_of(facets[j]) &&
          !(facets[j].subset_of(facets[i]) && j > i)) {
        absorbed = true;
        break;
      }
    }
    if (absorbed) {
      if (warnings)
        warnings->push_back("facet '" + facets[i].str() +
                            "' absorbed into a larger facet");
    } else {
      maximal.push_back(facets[i]);
    }
  }
  if (maximal.empty()) maximal.push_back(Simplex());
  Complex X;
  X.data_ = std::make_shared<Complex::Data>();
  X.data_->facets = std::move(maximal);
  std::set<VertexToken> verts;
  int dmin = 1 << 20, dmax = -1;
  for (const auto& f : X.data_->facets) {
    dmax = std::max(dmax, f.dim());
    dmin = std::min(dmin, f.dim());
    for (const auto& v : f.vertices()) verts.insert(v);
  }
  X.data_->vertices.assign(verts.begin(), verts.end());
  X.data_->dim = dmax;
  X.data_->pure = (dmin == dmax);
  return X;
}

Complex complex_from_facets(const std::vector<std::vector<VertexToken>>& facets,
                            std::vector<std::string>* warnings) {
  std::vector<Simplex> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty())
      throw Error(ErrorKind::MalformedFacet, "empty facet");
    fs.push_back(Simplex::of(f));
  }
  return complex_from_simplices(std::move(fs), warnings);
}

long long FVector::f(int k) const {
  int i = k + 1;
  if (i < 0 || i >= static_cast<int>(entries.size())) return 0;
  return entries[i];
}

FVector f_vector(const Complex& X) {
  FVector fv;
  fv.entries.push_back(1);
  for (int k = 0; k <= X.dim(); ++k) fv.entries.push_back(X.face_count(k));
  return fv;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GVector g_vector(const Complex& X) {
  int d = X.dim();
  if (d < 1)
    throw Error(ErrorKind::Precondition,
                "g-vector requires a complex of dimension >= 1");
  FVector fv = f_vector(X);
  GVector g;
  g.g1 = fv.f(0) - (d + 2);
  g.g2 = fv.f(1) - (d + 1) * fv.f(0) + binomial(d + 2, 2);
  return g;
}

Complex link(const Complex& X, const Simplex& s) {
  if (!X.contains(s))
    throw Error(ErrorKind::AbsentFace, "link of absent face '" + s.str() + "'");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets())
    if (s.subset_of(f)) fs.push_back(f.minus(s));
  return complex_from_simplices(std::move(fs));
}

Complex star(const Complex& X, const Simplex& s) {
  if (!X.contains(s))
    throw Error(ErrorKind::AbsentFace, "star of absent face '" + s.str() + "'");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets())
    if (s.subset_of(f)) fs.push_back(f);
  return complex_from_simplices(std::move(fs));
}

Complex antistar(const Complex& X, const VertexToken& v) {
  if (!X.has_vertex(v))
    throw Error(ErrorKind::UnknownVertex, "antistar of absent vertex '" + v + "'");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets())
    fs.push_back(f.contains(v) ? f.without(v) : f);
  return complex_from_simplices(std::move(fs));
}

long long degree(const Complex& X, const Simplex& s) {
  return static_cast<long long>(link(X, s).vertices().size());
}

Complex induced(const Complex& X, const std::set<VertexToken>& S) {
  for (const auto& v : S)
    if (!X.has_vertex(v))
      throw Error(ErrorKind::UnknownVertex,
                  "induced subcomplex on absent vertex '" + v + "'");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets()) {
    std::vector<VertexToken> kept;
    for (const auto& v : f.vertices())
      if (S.count(v)) kept.push_back(v);
    fs.push_back(Simplex::of(std::move(kept)));
  }
  return complex_from_simplices(std::move(fs));
}

Complex join_complexes(const Complex& X, const Complex& Y) {
  for (const auto& v : Y.vertices())
    if (X.has_vertex(v))
      throw Error(ErrorKind::VertexOverlap,
                  "join operands share vertex '" + v + "'");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets())
    for (const auto& g : Y.facets()) fs.push_back(f.unite(g));
  return complex_from_simplices(std::move(fs));
}

Complex cone(const VertexToken& apex, const Complex& X) {
  require_valid_token(apex);
  if (X.has_vertex(apex))
    throw Error(ErrorKind::VertexOverlap,
                "cone apex '" + apex + "' already a vertex");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets()) fs.push_back(f.with(apex));
  return complex_from_simplices(std::move(fs));
}

std::pair<VertexToken, VertexToken> suspension_apexes(const Complex& X) {
  auto fresh = [&X](std::string base) {
    while (X.has_vertex(base)) base += "'";
    return base;
  };
  VertexToken n = fresh("N0");
  VertexToken s = fresh("S0");
  if (n == s) s = fresh(s + "'");
  return {n, s};
}

Complex suspension(const Complex& X) {
  auto [n, s] = suspension_apexes(X);
  std::vector<Simplex> fs;
  for (const auto& f : X.facets()) {
    fs.push_back(f.with(n));
    fs.push_back(f.with(s));
  }
  return complex_from_simplices(std::move(fs));
}

MissingEdges missing_edges(const Complex& X) {
  MissingEdges out;
  const auto& vs = X.vertices();
  std::set<Simplex> edges(X.faces(1).begin(), X.faces(1).end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Simplex e = Simplex::of({vs[i], vs[j]});
      if (!edges.count(e)) out.pairs.emplace_back(vs[i], vs[j]);
    }
  out.count = static_cast<long long>(out.pairs.size());
  return out;
}

namespace {

// union-find
struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

void require_pure(const Complex& X, const char* what) {
  if (!X.pure())
    throw Error(ErrorKind::Purity, std::string(what) + " requires a pure complex");
}

}  // namespace

bool is_closed_pseudomanifold(const Complex& X) {
  require_pure(X, "pseudomanifold check");
  int d = X.dim();
  if (d < 1) return false;
  // ridge -> incident facet indices
  std::map<Simplex, std::vector<int>> ridge_cofacets;
  const auto& fs = X.facets();
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    for (const auto& v : fs[i].vertices())
      ridge_cofacets[fs[i].without(v)].push_back(i);
  DSU dsu(static_cast<int>(fs.size()));
  for (const auto& [ridge, inc] : ridge_cofacets) {
    if (inc.size() != 2) return false;
    dsu.unite(inc[0], inc[1]);
  }
  int root = dsu.find(0);
  for (int i = 1; i < static_cast<int>(fs.size()); ++i)
    if (dsu.find(i) != root) return false;
  return true;
}

bool is_single_cycle(const Complex& X) {
  if (X.dim() != 1 || !X.pure()) return false;
  std::map<VertexToken, int> deg;
  for (const auto& e : X.facets())
    for (const auto& v : e.vertices()) ++deg[v];
  for (const auto& [v, dg] : deg)
    if (dg != 2) return false;
  if (X.face_count(0) != X.face_count(1)) return false;
  // connectivity over edges
  std::map<VertexToken, int> id;
  for (const auto& v : X.vertices()) id[v] = static_cast<int>(id.size());
  DSU dsu(static_cast<int>(id.size()));
  for (const auto& e : X.facets())
    dsu.unite(id[e.vertices()[0]], id[e.vertices()[1]]);
  int root = dsu.find(0);
  for (int i = 1; i < static_cast<int>(id.size()); ++i)
    if (dsu.find(i) != root) return false;
  return true;
}

namespace {

bool vertex_connected(const Complex& X) {
  std::map<VertexToken, int> id;
  for (const auto& v : X.vertices()) id[v] = static_cast<int>(id.size());
  if (id.empty()) return false;
  DSU dsu(static_cast<int>(id.size()));
  for (const auto& f : X.facets()) {
    const auto& vs = f.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) dsu.unite(id[vs[0]], id[vs[i]]);
  }
  int root = dsu.find(0);
  for (int i = 1; i < static_cast<int>(id.size()); ++i)
    if (dsu.find(i) != root) return false;
  return true;
}

}  // namespace

bool verify_2sphere(const Complex& X) {
  if (X.dim() != 2)
    throw Error(ErrorKind::Purity, "2-sphere check requires dimension 2");
  require_pure(X, "2-sphere check");
  std::map<Simplex, int> edge_count;
  for (const auto& f : X.facets())
    for (const auto& v : f.vertices()) ++edge_count[f.without(v)];
  for (const auto& [e, c] : edge_count)
    if (c != 2) return false;
  if (!vertex_connected(X)) return false;
  long long chi = X.face_count(0) - X.face_count(1) + X.face_count(2);
  return chi == 2;
}

bool verify_closed_surface(const Complex& X) {
  if (X.dim() != 2)
    throw Error(ErrorKind::Purity, "surface check requires dimension 2");
  if (!is_closed_pseudomanifold(X)) return false;
  for (const auto& v : X.vertices())
    if (!is_single_cycle(link(X, Simplex::of({v})))) return false;
  return true;
}

bool verify_closed_3manifold(const Complex& X) {
  if (X.dim() != 3)
    throw Error(ErrorKind::Purity, "3-manifold check requires dimension 3");
  if (!is_closed_pseudomanifold(X)) return false;
  for (const auto& v : X.vertices())
    if (!verify_2sphere(link(X, Simplex::of({v})))) return false;
  return true;
}

bool is_join_over_pair(const Complex& X, const VertexToken& u,
                       const VertexToken& v) {
  if (!X.has_vertex(u) || !X.has_vertex(v))
    throw Error(ErrorKind::UnknownVertex, "join-over-pair on absent vertex");
  if (u == v) throw Error(ErrorKind::Precondition, "join-over-pair needs u != v");
  if (X.contains(Simplex::of({u, v}))) return false;
  Complex lu = link(X, Simplex::of({u}));
  Complex lv = link(X, Simplex::of({v}));
  if (!(lu == lv)) return false;
  Complex pair = complex_from_facets({{u}, {v}});
  return join_complexes(lu, pair) == X;
}

}  // namespace eqtri
