#include "eqtri/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace eqtri {

namespace {

// Indexed view of a complex with adjacency bitsets and refined vertex colors.
struct View {
  std::vector<VertexToken> tokens;            // index -> token, token order
  std::map<VertexToken, int> index;
  int n = 0;
  std::vector<std::vector<std::uint64_t>> adj;  // n x words bitset
  std::vector<std::vector<int>> facet_idx;      // facets as sorted index lists
  std::set<std::vector<int>> facet_set;
  std::vector<int> color;                       // refinement-stable class ids

  bool adjacent(int a, int b) const {
    return (adj[a][b / 64] >> (b % 64)) & 1ull;
  }
};

View make_view(const Complex& X) {
  View v;
  v.tokens = X.vertices();
  v.n = static_cast<int>(v.tokens.size());
  for (int i = 0; i < v.n; ++i) v.index[v.tokens[i]] = i;
  std::size_t words = (v.n + 63) / 64;
  v.adj.assign(v.n, std::vector<std::uint64_t>(words, 0));
  for (const auto& e : X.faces(1)) {
    int a = v.index.at(e.vertices()[0]);
    int b = v.index.at(e.vertices()[1]);
    v.adj[a][b / 64] |= 1ull << (b % 64);
    v.adj[b][a / 64] |= 1ull << (a % 64);
  }
  for (const auto& f : X.facets()) {
    std::vector<int> idx;
    for (const auto& t : f.vertices()) idx.push_back(v.index.at(t));
    std::sort(idx.begin(), idx.end());
    v.facet_set.insert(idx);
    v.facet_idx.push_back(std::move(idx));
  }
  return v;
}

// Joint Weisfeiler-Lehman style refinement so class ids are comparable
// across the two views.
void refine_colors(View& X, View& Y) {
  auto initial = [](const View& v) {
    std::vector<std::vector<long long>> keys(v.n);
    std::vector<int> deg(v.n, 0), fct(v.n, 0);
    for (int a = 0; a < v.n; ++a)
      for (int b = 0; b < v.n; ++b)
        if (a != b && v.adjacent(a, b)) ++deg[a];
    for (const auto& f : v.facet_idx)
      for (int a : f) ++fct[a];
    for (int a = 0; a < v.n; ++a) keys[a] = {deg[a], fct[a]};
    return keys;
  };
  std::vector<std::vector<long long>> kx = initial(X), ky = initial(Y);
  auto assign = [](const std::vector<std::vector<long long>>& kx,
                   const std::vector<std::vector<long long>>& ky,
                   std::vector<int>& cx, std::vector<int>& cy) {
    std::set<std::vector<long long>> all(kx.begin(), kx.end());
    all.insert(ky.begin(), ky.end());
    std::map<std::vector<long long>, int> id;
    for (const auto& k : all) id[k] = static_cast<int>(id.size());
    cx.resize(kx.size());
    cy.resize(ky.size());
    for (std::size_t i = 0; i < kx.size(); ++i) cx[i] = id.at(kx[i]);
    for (std::size_t i = 0; i < ky.size(); ++i) cy[i] = id.at(ky[i]);
  };
  assign(kx, ky, X.color, Y.color);
  for (int round = 0; round < 8; ++round) {
    auto step = [](const View& v) {
      std::vector<std::vector<long long>> keys(v.n);
      for (int a = 0; a < v.n; ++a) {
        std::vector<long long> nb;
        for (int b = 0; b < v.n; ++b)
          if (a != b && v.adjacent(a, b)) nb.push_back(v.color[b]);
        std::sort(nb.begin(), nb.end());
        keys[a].push_back(v.color[a]);
        keys[a].insert(keys[a].end(), nb.begin(), nb.end());
      }
      return keys;
    };
    kx = step(X);
    ky = step(Y);
    std::vector<int> nx, ny;
    assign(kx, ky, nx, ny);
    if (nx == X.color && ny == Y.color) break;
    X.color = std::move(nx);
    Y.color = std::move(ny);
  }
}

struct Searcher {
  const View& X;
  const View& Y;
  bool collect_all;
  std::vector<IsoMap> found;
  std::vector<int> order;        // source vertices in canonical order
  std::vector<int> image;        // index in X -> index in Y (-1 unset)
  std::vector<bool> used;        // Y indices taken

  Searcher(const View& x, const View& y, bool all)
      : X(x), Y(y), collect_all(all) {}

  bool facets_match() const {
    for (const auto& f : X.facet_idx) {
      std::vector<int> img;
      img.reserve(f.size());
      for (int a : f) img.push_back(image[a]);
      std::sort(img.begin(), img.end());
      if (!Y.facet_set.count(img)) return false;
    }
    return true;
  }

  bool run() {
    if (X.n != Y.n || X.facet_idx.size() != Y.facet_idx.size()) return false;
    // class size histograms must agree
    std::map<int, int> hx, hy;
    for (int c : X.color) ++hx[c];
    for (int c : Y.color) ++hy[c];
    if (hx != hy) return false;
    order.resize(X.n);
    for (int i = 0; i < X.n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (X.color[a] != X.color[b]) return X.color[a] < X.color[b];
      return X.tokens[a] < X.tokens[b];
    });
    image.assign(X.n, -1);
    used.assign(Y.n, false);
    extend(0);
    return !found.empty();
  }

  void extend(int pos) {
    if (!collect_all && !found.empty()) return;
    if (pos == X.n) {
      if (facets_match()) {
        IsoMap m;
        for (int i = 0; i < X.n; ++i) m[X.tokens[i]] = Y.tokens[image[i]];
        found.push_back(std::move(m));
      }
      return;
    }
    int src = order[pos];
    // candidates in token order within the matching class
    std::vector<int> cands;
    for (int c = 0; c < Y.n; ++c)
      if (!used[c] && Y.color[c] == X.color[src]) cands.push_back(c);
    std::stable_sort(cands.begin(), cands.end(),
                     [&](int a, int b) { return Y.tokens[a] < Y.tokens[b]; });
    for (int cand : cands) {
      bool ok = true;
      for (int p = 0; p < pos; ++p) {
        int other = order[p];
        if (X.adjacent(src, other) != Y.adjacent(cand, image[other])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[src] = cand;
      used[cand] = true;
      extend(pos + 1);
      image[src] = -1;
      used[cand] = false;
      if (!collect_all && !found.empty()) return;
    }
  }
};

std::vector<IsoMap> search(const Complex& A, const Complex& B, bool all) {
  View x = make_view(A);
  View y = make_view(B);
  refine_colors(x, y);
  Searcher s(x, y, all);
  s.run();
  return std::move(s.found);
}

}  // namespace

std::optional<IsoMap> find_isomorphism(const Complex& X, const Complex& Y) {
  auto maps = search(X, Y, false);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::vector<IsoMap> all_isomorphisms(const Complex& X, const Complex& Y) {
  return search(X, Y, true);
}

AutomorphismGroup automorphism_group(const Complex& X) {
  AutomorphismGroup g;
  auto maps = search(X, X, true);
  g.order = static_cast<long long>(maps.size());
  for (const auto& m : maps) {
    std::map<VertexToken, VertexToken> mm(m.begin(), m.end());
    g.elements.push_back(Permutation::from_map(std::move(mm)));
  }
  std::sort(g.elements.begin(), g.elements.end());
  // greedy deterministic generating set
  std::set<Permutation> span = {Permutation()};
  for (const auto& el : g.elements) {
    if (span.count(el)) continue;
    g.generators.push_back(el);
    // close span under the new generator and existing span elements
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Permutation> cur(span.begin(), span.end());
      for (const auto& a : cur)
        for (const auto& b : g.generators) {
          Permutation p = a.compose(b);
          if (span.insert(p).second) grew = true;
        }
    }
    if (static_cast<long long>(span.size()) == g.order) break;
  }
  return g;
}

bool is_subaction(const Complex& X, const GroupAction& a) {
  AutomorphismGroup g = automorphism_group(X);
  std::set<Permutation> members(g.elements.begin(), g.elements.end());
  for (const auto& el : a.elements())
    if (!members.count(el.perm)) return false;
  return true;
}

}  // namespace eqtri
