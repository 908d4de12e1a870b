#include "eqtri/action.hpp"

#include <algorithm>

namespace eqtri {

Permutation Permutation::from_map(std::map<VertexToken, VertexToken> m) {
  for (auto it = m.begin(); it != m.end();) {
    require_valid_token(it->first);
    require_valid_token(it->second);
    it = (it->first == it->second) ? m.erase(it) : std::next(it);
  }
  std::set<VertexToken> images;
  for (const auto& [from, to] : m) {
    if (!images.insert(to).second)
      throw Error(ErrorKind::Parse, "permutation is not injective at '" + to + "'");
  }
  for (const auto& [from, to] : m) {
    if (!m.count(to))
      throw Error(ErrorKind::Parse,
                  "permutation image '" + to + "' has no image of its own");
  }
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<VertexToken>>& cycles) {
  std::map<VertexToken, VertexToken> m;
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2)
      throw Error(ErrorKind::Parse, "cycle with fewer than two tokens");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const VertexToken& from = cyc[i];
      const VertexToken& to = cyc[(i + 1) % cyc.size()];
      if (m.count(from))
        throw Error(ErrorKind::Parse, "cycles overlap at '" + from + "'");
      m[from] = to;
    }
  }
  return from_map(std::move(m));
}

const VertexToken& Permutation::image(const VertexToken& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? v : it->second;
}

std::vector<VertexToken> Permutation::moved() const {
  std::vector<VertexToken> out;
  for (const auto& [from, to] : map_) out.push_back(from);
  return out;
}

Permutation Permutation::inverse() const {
  std::map<VertexToken, VertexToken> m;
  for (const auto& [from, to] : map_) m[to] = from;
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::compose(const Permutation& then) const {
  std::map<VertexToken, VertexToken> m;
  std::set<VertexToken> domain;
  for (const auto& [from, to] : map_) domain.insert(from);
  for (const auto& [from, to] : then.map_) domain.insert(from);
  for (const auto& v : domain) {
    VertexToken img = then.image(image(v));
    if (img != v) m[v] = img;
  }
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

bool Permutation::is_involution() const {
  for (const auto& [from, to] : map_)
    if (image(to) != from) return false;
  return true;
}

bool Permutation::commutes_with(const Permutation& o) const {
  return compose(o) == o.compose(*this);
}

std::vector<std::vector<VertexToken>> Permutation::cycles() const {
  std::vector<std::vector<VertexToken>> out;
  std::set<VertexToken> seen;
  for (const auto& [start, ignored] : map_) {
    if (seen.count(start)) continue;
    std::vector<VertexToken> cyc;
    VertexToken cur = start;
    do {
      cyc.push_back(cur);
      seen.insert(cur);
      cur = image(cur);
    } while (cur != start);
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

std::string Permutation::str() const {
  if (map_.empty()) return "id";
  std::string out;
  for (const auto& cyc : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += cyc[i];
    }
    out += ')';
  }
  return out;
}

Simplex act_on_simplex(const Permutation& p, const Simplex& s) {
  std::vector<VertexToken> vs;
  vs.reserve(s.size());
  for (const auto& v : s.vertices()) vs.push_back(p.image(v));
  return Simplex::of(std::move(vs));
}

Complex act_on_complex(const Permutation& p, const Complex& X) {
  std::vector<Simplex> fs;
  fs.reserve(X.facets().size());
  for (const auto& f : X.facets()) fs.push_back(act_on_simplex(p, f));
  return complex_from_simplices(std::move(fs));
}

GroupAction GroupAction::from_generators(std::vector<NamedPermutation> gens) {
  for (const auto& g : gens) {
    if (!g.perm.is_involution())
      throw Error(ErrorKind::Involution,
                  "generator " + g.name + " = " + g.perm.str() +
                      " is not an involution");
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].perm.commutes_with(gens[j].perm))
        throw Error(ErrorKind::Commutativity,
                    "generators " + gens[i].name + " and " + gens[j].name +
                        " do not commute");
    }
  GroupAction a;
  a.gens_ = gens;
  // independent generators: keep those not already in the running closure
  std::vector<NamedPermutation> indep;
  std::set<Permutation> closure_set;
  std::vector<NamedPermutation> closure = {{"e", Permutation()}};
  closure_set.insert(Permutation());
  for (const auto& g : gens) {
    if (closure_set.count(g.perm)) continue;  // dependent generator
    std::vector<NamedPermutation> next = closure;
    for (const auto& el : closure) {
      Permutation prod = el.perm.compose(g.perm);
      std::string name = el.perm.identity() ? g.name : el.name + "*" + g.name;
      next.push_back({name, prod});
      closure_set.insert(prod);
    }
    closure = std::move(next);
    indep.push_back(g);
  }
  a.elements_ = std::move(closure);
  a.rank_ = static_cast<int>(indep.size());
  return a;
}

GroupAction GroupAction::restrict_to(const std::set<VertexToken>& keep,
                                     std::vector<std::string>* warnings) const {
  std::vector<NamedPermutation> gens;
  for (const auto& g : gens_) {
    std::vector<std::vector<VertexToken>> kept;
    for (const auto& cyc : g.perm.cycles()) {
      std::size_t inside = 0;
      for (const auto& v : cyc) inside += keep.count(v);
      if (inside == cyc.size()) {
        kept.push_back(cyc);
      } else if (inside == 0) {
        if (warnings) {
          std::string c;
          for (const auto& v : cyc) c += (c.empty() ? "" : " ") + v;
          warnings->push_back("generator " + g.name + ": dropped cycle (" + c +
                              ") outside the vertex set");
        }
      } else {
        throw Error(ErrorKind::Equivariance,
                    "generator " + g.name +
                        " has a cycle crossing the vertex set boundary");
      }
    }
    gens.push_back({g.name, Permutation::from_cycles(kept)});
  }
  return from_generators(std::move(gens));
}

EquivarianceReport is_equivariant(const Complex& X, const GroupAction& a) {
  for (const auto& g : a.generators())
    for (const auto& v : g.perm.moved())
      if (!X.has_vertex(v))
        throw Error(ErrorKind::UnknownVertex,
                    "action moves '" + v + "' which is not a vertex");
  std::set<Simplex> facets(X.facets().begin(), X.facets().end());
  EquivarianceReport rep;
  for (const auto& g : a.generators()) {
    for (const auto& f : X.facets()) {
      if (!facets.count(act_on_simplex(g.perm, f))) {
        rep.ok = false;
        rep.counterexample = {g.name, f};
        return rep;
      }
    }
  }
  return rep;
}

namespace {

void require_equivariant(const Complex& X, const GroupAction& a) {
  if (auto rep = is_equivariant(X, a); !rep.ok)
    throw Error(ErrorKind::Precondition,
                "the action is not a group of simplicial automorphisms");
}

}  // namespace

std::vector<VertexToken> fixed_vertices(const Complex& X, const GroupAction& a) {
  require_equivariant(X, a);
  std::vector<VertexToken> out;
  for (const auto& v : X.vertices()) {
    bool fixed = true;
    for (const auto& g : a.generators())
      if (g.perm.image(v) != v) { fixed = false; break; }
    if (fixed) out.push_back(v);
  }
  return out;
}

OrbitPartition vertex_orbits(const Complex& X, const GroupAction& a) {
  require_equivariant(X, a);
  OrbitPartition out;
  std::set<VertexToken> seen;
  for (const auto& v : X.vertices()) {
    if (seen.count(v)) continue;
    std::set<VertexToken> orbit;
    for (const auto& el : a.elements()) orbit.insert(el.perm.image(v));
    out.classes.emplace_back(orbit.begin(), orbit.end());
    for (const auto& u : orbit) seen.insert(u);
    long long size = static_cast<long long>(orbit.size());
    int orbit_rank = 0;
    while ((1ll << orbit_rank) < size) ++orbit_rank;
    if ((1ll << orbit_rank) != size)
      throw Error(ErrorKind::Precondition,
                  "orbit size is not a power of two; action is not Z_2^k");
    out.stabilizer_rank.push_back(a.rank() - orbit_rank);
  }
  return out;
}

std::vector<std::vector<Simplex>> facet_orbits(const Complex& X,
                                               const GroupAction& a) {
  require_equivariant(X, a);
  std::vector<std::vector<Simplex>> out;
  std::set<Simplex> seen;
  for (const auto& f : X.facets()) {
    if (seen.count(f)) continue;
    std::set<Simplex> orbit;
    for (const auto& el : a.elements()) orbit.insert(act_on_simplex(el.perm, f));
    out.emplace_back(orbit.begin(), orbit.end());
    for (const auto& s : orbit) seen.insert(s);
  }
  return out;
}

bool nonfixed_parity_check(const Complex& X, const GroupAction& a) {
  OrbitPartition parts = vertex_orbits(X, a);
  for (const auto& cls : parts.classes)
    if (cls.size() != 1 && cls.size() % 2 != 0) return false;
  return true;
}

}  // namespace eqtri
