#include "eqtri/surgery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace eqtri {

namespace {

Complex vertex_link(const Complex& X, const VertexToken& v) {
  return link(X, Simplex::of({v}));
}

// Orders the edge set of a 1-dimensional complex into a single cycle: every
// vertex of degree 2, one closed walk covering everything. Starts at the
// smallest vertex and proceeds toward its smaller neighbor.
std::optional<std::vector<VertexToken>> cycle_sequence(const Complex& C) {
  if (C.dim() != 1) return std::nullopt;
  std::map<VertexToken, std::vector<VertexToken>> adj;
  std::size_t edges = 0;
  for (const auto& f : C.facets()) {
    if (f.size() != 2) return std::nullopt;
    adj[f.vertices()[0]].push_back(f.vertices()[1]);
    adj[f.vertices()[1]].push_back(f.vertices()[0]);
    ++edges;
  }
  if (adj.size() != edges || edges < 3) return std::nullopt;
  for (auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) return std::nullopt;
    std::sort(nbrs.begin(), nbrs.end());
  }
  std::vector<VertexToken> seq;
  VertexToken start = adj.begin()->first;
  VertexToken prev = start, cur = adj[start][0];
  seq.push_back(start);
  while (cur != start) {
    seq.push_back(cur);
    const auto& nbrs = adj[cur];
    VertexToken next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    if (seq.size() > edges) return std::nullopt;  // disconnected union of cycles
  }
  if (seq.size() != adj.size()) return std::nullopt;
  return seq;
}

// Base cycle of L viewed as {p,q} * C, or nullopt when L has no such shape.
std::optional<std::vector<VertexToken>> bipyramid_base(const Complex& L, const VertexToken& p,
                                                       const VertexToken& q) {
  if (p == q || !L.has_vertex(p) || !L.has_vertex(q)) return std::nullopt;
  if (L.contains(Simplex::of({p, q}))) return std::nullopt;
  for (const auto& f : L.facets())
    if (f.contains(p) == f.contains(q)) return std::nullopt;
  Complex lkp = vertex_link(L, p);
  if (lkp != vertex_link(L, q)) return std::nullopt;
  if (lkp.vertices().size() + 2 != L.vertices().size()) return std::nullopt;
  return cycle_sequence(lkp);
}

Complex checked_sphere_link(const Complex& X, const VertexToken& w) {
  if (!X.has_vertex(w))
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + w + "' in the complex");
  Complex L = vertex_link(X, w);
  if (L.dim() != 2 || !verify_2sphere(L))
    throw Error(ErrorKind::NotABipyramid, "link of '" + w + "' is not a 2-sphere");
  return L;
}

}  // namespace

std::optional<BipyramidShape> detect_bipyramid_link(const Complex& X, const VertexToken& w) {
  Complex L = checked_sphere_link(X, w);
  const auto& verts = L.vertices();
  for (auto i = verts.begin(); i != verts.end(); ++i)
    for (auto j = std::next(i); j != verts.end(); ++j) {
      auto base = bipyramid_base(L, *i, *j);
      if (!base) continue;
      if (X.contains(Simplex::of({*i, *j}))) continue;
      return BipyramidShape{{*i, *j}, std::move(*base)};
    }
  return std::nullopt;
}

Complex retriangulate_star(const Complex& X, const VertexToken& w, const VertexToken& p,
                           const VertexToken& q) {
  Complex L = checked_sphere_link(X, w);
  auto base = bipyramid_base(L, std::min(p, q), std::max(p, q));
  if (!base)
    throw Error(ErrorKind::NotABipyramid,
                "link of '" + w + "' is not a bipyramid with apexes '" + p + "', '" + q + "'");
  if (X.contains(Simplex::of({p, q})))
    throw Error(ErrorKind::ApexEdgePresent,
                "edge '" + p + " " + q + "' is already a face of the complex");
  std::vector<Simplex> fs;
  for (const auto& f : X.facets())
    if (!f.contains(w)) fs.push_back(f);
  const auto& c = *base;
  for (std::size_t i = 0; i < c.size(); ++i)
    fs.push_back(Simplex::of({p, q, c[i], c[(i + 1) % c.size()]}));
  return complex_from_simplices(fs);
}

bool check_induced_link_condition(const Complex& X, const VertexToken& u) {
  if (!X.has_vertex(u))
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + u + "' in the complex");
  Complex lk = vertex_link(X, u);
  std::set<VertexToken> keep(lk.vertices().begin(), lk.vertices().end());
  return induced(X, keep) == lk;
}

namespace {

bool maps_facets_onto(const Complex& A, const Complex& B, const IsoMap& psi) {
  if (A.facets().size() != B.facets().size()) return false;
  for (const auto& f : A.facets()) {
    std::vector<VertexToken> img;
    img.reserve(f.size());
    for (const auto& v : f.vertices()) {
      auto it = psi.find(v);
      if (it == psi.end()) return false;
      img.push_back(it->second);
    }
    Simplex s = Simplex::of(img);
    const auto& bf = B.facets();
    if (!std::binary_search(bf.begin(), bf.end(), s)) return false;
  }
  return true;
}

void require_link_iso(const Complex& lkU, const Complex& lkV, const IsoMap& psi) {
  std::set<VertexToken> dom, ran;
  for (const auto& [a, b] : psi) {
    dom.insert(a);
    ran.insert(b);
  }
  std::set<VertexToken> vu(lkU.vertices().begin(), lkU.vertices().end());
  std::set<VertexToken> vv(lkV.vertices().begin(), lkV.vertices().end());
  if (dom != vu || ran != vv || ran.size() != psi.size())
    throw Error(ErrorKind::IsoMismatch,
                "psi is not a vertex bijection between the two links");
  if (!maps_facets_onto(lkU, lkV, psi))
    throw Error(ErrorKind::IsoMismatch, "psi does not map link facets onto link facets");
}

struct SumParts {
  Complex lkU, lkV;
};

SumParts checked_sum_parts(const SumPlan& plan) {
  if (!plan.left.has_vertex(plan.u))
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + plan.u + "' in the left complex");
  if (!plan.right.has_vertex(plan.v))
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + plan.v + "' in the right complex");
  // Only the left link has to be induced: seam-spanned faces of the sum then
  // come from exactly one side, so the gluing happens along the link sphere
  // alone.  The equivariant construction checks the right side as well.
  if (!check_induced_link_condition(plan.left, plan.u))
    throw Error(ErrorKind::InducedLink,
                "link of '" + plan.u + "' is not induced in the left complex");
  return {vertex_link(plan.left, plan.u), vertex_link(plan.right, plan.v)};
}

// Chooses psi: the supplied one (validated) or the first survivor of `admit`
// over all link isomorphisms.
void choose_psi(const SumPlan& plan, const SumParts& parts,
                const std::function<bool(const IsoMap&)>& admit, IsoMap& psi, bool& searched,
                std::size_t& survivors, ErrorKind empty_kind, const std::string& empty_msg) {
  if (plan.psi) {
    require_link_iso(parts.lkU, parts.lkV, *plan.psi);
    if (admit && !admit(*plan.psi)) throw Error(empty_kind, empty_msg);
    psi = *plan.psi;
    searched = false;
    survivors = 1;
    return;
  }
  auto all = all_isomorphisms(parts.lkU, parts.lkV);
  if (all.empty()) throw Error(ErrorKind::IsoMismatch, "the two links are not isomorphic");
  std::vector<IsoMap> ok;
  for (auto& m : all)
    if (!admit || admit(m)) ok.push_back(std::move(m));
  if (ok.empty()) throw Error(empty_kind, empty_msg);
  psi = ok.front();
  searched = true;
  survivors = ok.size();
}

// Relabels right-side vertices: link vertices take their psi-preimage tokens,
// everything else gets the suffix (repeated until fresh).
std::map<VertexToken, VertexToken> build_rename(const SumPlan& plan, const IsoMap& psi) {
  std::map<VertexToken, VertexToken> rename;
  std::set<VertexToken> used;
  for (const auto& x : plan.left.vertices())
    if (x != plan.u) used.insert(x);
  for (const auto& [a, b] : psi) rename[b] = a;
  for (const auto& y : plan.right.vertices()) {
    if (y == plan.v || rename.count(y)) continue;
    VertexToken cand = y + plan.suffix;
    if (plan.suffix.empty()) {
      if (used.count(cand))
        throw Error(ErrorKind::VertexOverlap,
                    "empty suffix collides on right-side vertex '" + y + "'");
    } else {
      while (used.count(cand)) cand += plan.suffix;
    }
    require_valid_token(cand);
    used.insert(cand);
    rename[y] = cand;
  }
  return rename;
}

Complex assemble_sum(const SumPlan& plan, const std::map<VertexToken, VertexToken>& rename) {
  std::vector<Simplex> fs;
  for (const auto& f : plan.left.facets())
    if (!f.contains(plan.u)) fs.push_back(f);
  for (const auto& f : plan.right.facets()) {
    if (f.contains(plan.v)) continue;
    std::vector<VertexToken> img;
    img.reserve(f.size());
    for (const auto& y : f.vertices()) img.push_back(rename.at(y));
    fs.push_back(Simplex::of(img));
  }
  return complex_from_simplices(fs);
}

}  // namespace

SumOutcome star_connected_sum_full(const SumPlan& plan) {
  SumParts parts = checked_sum_parts(plan);
  SumOutcome out;
  choose_psi(plan, parts, nullptr, out.psi, out.psi_searched, out.psi_survivors,
             ErrorKind::IsoMismatch, "no admissible link isomorphism");
  out.right_rename = build_rename(plan, out.psi);
  out.complex = assemble_sum(plan, out.right_rename);
  return out;
}

Complex star_connected_sum(const SumPlan& plan) { return star_connected_sum_full(plan).complex; }

EquivariantSumOutcome equivariant_connected_sum(const SumPlan& plan, const GroupAction& aK,
                                                const GroupAction& aL) {
  if (aK.rank() != aL.rank() || aK.generators().size() != aL.generators().size())
    throw Error(ErrorKind::Precondition, "the two actions do not pair generator-by-generator");
  for (const auto& g : aK.generators())
    if (g.perm.moves(plan.u))
      throw Error(ErrorKind::FixedVertex,
                  "vertex '" + plan.u + "' is moved by generator " + g.name);
  for (const auto& g : aL.generators())
    if (g.perm.moves(plan.v))
      throw Error(ErrorKind::FixedVertex,
                  "vertex '" + plan.v + "' is moved by generator " + g.name);
  if (auto rep = is_equivariant(plan.left, aK); !rep.ok)
    throw Error(ErrorKind::Equivariance, "the left complex is not invariant under its action");
  if (auto rep = is_equivariant(plan.right, aL); !rep.ok)
    throw Error(ErrorKind::Equivariance, "the right complex is not invariant under its action");

  SumParts parts = checked_sum_parts(plan);
  auto intertwines = [&](const IsoMap& m) {
    for (std::size_t i = 0; i < aK.generators().size(); ++i) {
      const Permutation& muK = aK.generators()[i].perm;
      const Permutation& muL = aL.generators()[i].perm;
      for (const auto& [x, y] : m) {
        auto it = m.find(muK.image(x));
        if (it == m.end() || it->second != muL.image(y)) return false;
      }
    }
    return true;
  };

  EquivariantSumOutcome out;
  choose_psi(plan, parts, intertwines, out.psi, out.psi_searched, out.psi_survivors,
             ErrorKind::Equivariance,
             "no link isomorphism intertwines the paired generators");
  if (!check_induced_link_condition(plan.right, plan.v))
    throw Error(ErrorKind::InducedLink,
                "link of '" + plan.v + "' is not induced in the right complex");
  out.right_rename = build_rename(plan, out.psi);
  out.complex = assemble_sum(plan, out.right_rename);

  std::vector<NamedPermutation> gens;
  for (std::size_t i = 0; i < aK.generators().size(); ++i) {
    const Permutation& muK = aK.generators()[i].perm;
    const Permutation& muL = aL.generators()[i].perm;
    std::map<VertexToken, VertexToken> m;
    for (const auto& x : plan.left.vertices()) {
      if (x == plan.u) continue;
      if (muK.image(x) != x) m[x] = muK.image(x);
    }
    for (const auto& [y, ry] : out.right_rename) {
      VertexToken img = out.right_rename.at(muL.image(y));
      if (img != ry) m[ry] = img;  // agrees with the left map on identified tokens
    }
    gens.push_back(NamedPermutation{aK.generators()[i].name, Permutation::from_map(std::move(m))});
  }
  out.action = GroupAction::from_generators(std::move(gens));
  if (auto rep = is_equivariant(out.complex, out.action); !rep.ok)
    throw Error(ErrorKind::Equivariance, "glued action fails to preserve the sum");
  return out;
}

long long g2_connected_sum_predicted(const Complex& K, const Complex& L, const VertexToken& u) {
  long long n = K.dim();
  FVector flk = f_vector(link(K, Simplex::of({u})));
  return g_vector(K).g2 + g_vector(L).g2 - flk.f(1) + (n - 1) * flk.f(0) -
         ((n + 1) * (n - 2)) / 2;
}

long long g2_connected_sum_3mfld(const Complex& K, const Complex& L, const VertexToken& u) {
  return g_vector(K).g2 + g_vector(L).g2 - f_vector(link(K, Simplex::of({u}))).f(0) + 4;
}

long long admissible_pair_bound(long long f0, long long d) {
  return (f0 * (f0 - 11)) / 2 - (d * (d - 9)) / 2 + 5;
}

std::vector<AdmissiblePairEntry> admissible_pair_survey() {
  // Known g2 floors for 3-dimensional real projective space by vertex count.
  const std::map<int, long long> floors = {{11, 17}, {12, 22}, {13, 21}, {14, 23},
                                           {15, 22}, {16, 19}, {17, 17}};
  // Pairs ruled out by the bound, with the separately published values where
  // the source states one for the individual pair.
  struct Row {
    int f0, d;
    std::optional<long long> claim;
  };
  const Row rows[] = {{11, 6, {}},  {11, 8, {}},    {11, 10, {}},   {12, 6, 17},
                      {12, 8, {}},  {12, 10, {}},   {13, 8, 22},    {13, 10, {}},
                      {13, 12, {}}, {14, 10, {}},   {14, 12, {}},   {15, 12, 17},
                      {15, 14, {}}, {16, 14, {}},   {17, 16, {}}};
  std::vector<AdmissiblePairEntry> out;
  for (const auto& r : rows) {
    AdmissiblePairEntry e;
    e.f0 = r.f0;
    e.d = r.d;
    e.bound = admissible_pair_bound(r.f0, r.d);
    e.published_floor = floors.at(r.f0);
    e.contradiction = e.bound < e.published_floor;
    e.published_claim = r.claim;
    out.push_back(e);
  }
  return out;
}

}  // namespace eqtri
