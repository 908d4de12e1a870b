#include "eqtri/bistellar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "eqtri/gf2.hpp"

namespace eqtri {

const char* sphere_verdict_name(SphereVerdict v) {
  switch (v) {
    case SphereVerdict::Yes: return "yes";
    case SphereVerdict::No: return "no";
    case SphereVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// Facets as vertex bitmasks over at most 32 tokens; a state is the sorted
// facet list. Moves never introduce vertices, so the state space is finite.
using Mask = std::uint32_t;
using State = std::vector<Mask>;

int popcount(Mask m) { return __builtin_popcount(m); }

struct MoveEngine {
  int n;  // token count

  std::vector<State> successors(const State& st) const {
    std::set<Mask> facet_set(st.begin(), st.end());
    // face presence for edges and triangles
    std::set<Mask> faces;
    for (Mask f : st) {
      for (Mask s = f; s; s = (s - 1) & f) faces.insert(s);
    }
    std::map<Mask, std::vector<Mask>> tri_cofacets, edge_cofacets;
    std::map<int, std::vector<Mask>> vertex_cofacets;
    for (Mask f : st) {
      for (int v = 0; v < n; ++v) {
        if (!(f >> v & 1)) continue;
        tri_cofacets[f & ~(Mask(1) << v)].push_back(f);
        vertex_cofacets[v].push_back(f);
      }
      Mask rest = f;
      while (rest) {
        int a = __builtin_ctz(rest);
        rest &= rest - 1;
        Mask r2 = rest;
        while (r2) {
          int b = __builtin_ctz(r2);
          r2 &= r2 - 1;
          edge_cofacets[(Mask(1) << a) | (Mask(1) << b)].push_back(f);
        }
      }
    }
    std::vector<std::pair<std::pair<int, Mask>, State>> moves;  // (prio,key)->state

    auto emit = [&](int prio, Mask key, const std::vector<Mask>& remove,
                    const std::vector<Mask>& add) {
      State next;
      std::set<Mask> rm(remove.begin(), remove.end());
      for (Mask f : st)
        if (!rm.count(f)) next.push_back(f);
      for (Mask f : add) next.push_back(f);
      std::sort(next.begin(), next.end());
      moves.push_back({{prio, key}, std::move(next)});
    };

    // 4 -> 1: vertex of degree 4 whose link is the tetrahedron boundary
    for (const auto& [v, cof] : vertex_cofacets) {
      if (cof.size() != 4) continue;
      Mask united = 0;
      for (Mask f : cof) united |= f & ~(Mask(1) << v);
      if (popcount(united) != 4) continue;
      if (facet_set.count(united)) continue;
      emit(0, Mask(1) << v, cof, {united});
    }
    // 3 -> 2: edge in exactly three facets, opposite triangle absent
    for (const auto& [e, cof] : edge_cofacets) {
      if (cof.size() != 3) continue;
      Mask tri = 0;
      for (Mask f : cof) tri |= f & ~e;
      if (popcount(tri) != 3) continue;
      if (faces.count(tri)) continue;
      int x = __builtin_ctz(e);
      int y = __builtin_ctz(e & (e - 1));
      emit(1, e, cof, {tri | (Mask(1) << x), tri | (Mask(1) << y)});
    }
    // 2 -> 3: triangle in two facets, opposite edge absent
    for (const auto& [tri, cof] : tri_cofacets) {
      if (cof.size() != 2) continue;
      Mask e = (cof[0] | cof[1]) & ~tri;
      if (popcount(e) != 2) continue;
      if (faces.count(e)) continue;
      std::vector<Mask> add;
      Mask rest = tri;
      while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        add.push_back(e | (tri & ~(Mask(1) << v)));
      }
      emit(2, tri, cof, add);
    }
    std::sort(moves.begin(), moves.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<State> out;
    out.reserve(moves.size());
    for (auto& m : moves) out.push_back(std::move(m.second));
    return out;
  }
};

int state_vertex_count(const State& st) {
  Mask all = 0;
  for (Mask f : st) all |= f;
  return popcount(all);
}

std::string state_key(const State& st) {
  std::string key;
  key.reserve(st.size() * 4);
  for (Mask f : st)
    for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>((f >> (8 * i)) & 0xff));
  return key;
}

}  // namespace

SphereVerdict verify_3sphere(const Complex& X, long long budget) {
  if (!verify_closed_3manifold(X))
    throw Error(ErrorKind::Precondition,
                "3-sphere check requires a closed 3-manifold");
  if (euler_characteristic(X) != 0) return SphereVerdict::No;
  BettiProfile b = betti_gf2(X);
  if (b.b != std::vector<long long>{1, 0, 0, 1}) return SphereVerdict::No;
  if (X.vertices().size() > 32)
    throw Error(ErrorKind::Range, "bistellar search supports at most 32 vertices");

  MoveEngine engine{static_cast<int>(X.vertices().size())};
  std::map<VertexToken, int> index;
  for (const auto& v : X.vertices()) index[v] = static_cast<int>(index.size());
  State start;
  for (const auto& f : X.facets()) {
    Mask m = 0;
    for (const auto& v : f.vertices()) m |= Mask(1) << index.at(v);
    start.push_back(m);
  }
  std::sort(start.begin(), start.end());

  std::set<std::string> visited = {state_key(start)};
  std::vector<State> stack = {start};
  long long expanded = 0;
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    if (state_vertex_count(st) == 5 && st.size() == 5) return SphereVerdict::Yes;
    if (++expanded > budget) return SphereVerdict::Indeterminate;
    auto succ = engine.successors(st);
    // push in reverse so the highest-priority move is explored first
    for (auto it = succ.rbegin(); it != succ.rend(); ++it) {
      std::string key = state_key(*it);
      if (visited.insert(std::move(key)).second) stack.push_back(std::move(*it));
    }
  }
  return SphereVerdict::Indeterminate;
}

SphereVerdict certify_sphere(const Complex& X, long long budget) {
  switch (X.dim()) {
    case 1:
      return is_single_cycle(X) ? SphereVerdict::Yes : SphereVerdict::No;
    case 2:
      return verify_2sphere(X) ? SphereVerdict::Yes : SphereVerdict::No;
    case 3:
      if (!verify_closed_3manifold(X)) return SphereVerdict::No;
      return verify_3sphere(X, budget);
    default:
      throw Error(ErrorKind::Range,
                  "sphere certification supports dimensions 1 through 3");
  }
}

}  // namespace eqtri
