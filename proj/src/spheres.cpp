#include "eqtri/spheres.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "eqtri/bistellar.hpp"
#include "eqtri/iso.hpp"

namespace eqtri {

int SignVector::support() const {
  int k = 0;
  for (int s : signs) k += (s != 0);
  return k;
}

SignVector SignVector::flipped(std::size_t i) const {
  SignVector v = *this;
  v.signs.at(i) = -v.signs.at(i);
  return v;
}

SignVector SignVector::negated() const {
  SignVector v = *this;
  for (int& s : v.signs) s = -s;
  return v;
}

int SignVector::sign_distance(const SignVector& a, const SignVector& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.signs.size() && i < b.signs.size(); ++i)
    d += (a.signs[i] != b.signs[i]);
  return d;
}

std::string SignVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ',';
    if (signs[i] == 0) {
      out += '0';
    } else {
      out += (signs[i] > 0) ? '+' : '-';
      if (i < magnitudes.size() && magnitudes[i]) out += format_rational(*magnitudes[i]);
    }
  }
  return out;
}

bool SignVector::operator==(const SignVector& o) const {
  return signs == o.signs && magnitudes == o.magnitudes;
}

bool SignVector::operator<(const SignVector& o) const {
  if (signs != o.signs) return signs < o.signs;
  return magnitudes < o.magnitudes;
}

void validate_sign_vector(const SignVector& v) {
  if (v.signs.empty()) throw Error(ErrorKind::Precondition, "empty sign vector");
  bool nonzero = false;
  for (int s : v.signs) {
    if (s < -1 || s > 1) throw Error(ErrorKind::Precondition, "sign entry outside {-1,0,+1}");
    nonzero |= (s != 0);
  }
  if (!nonzero) throw Error(ErrorKind::Precondition, "sign vector is the origin");
  if (!v.magnitudes.empty() && v.magnitudes.size() != v.signs.size())
    throw Error(ErrorKind::Precondition, "magnitude slots disagree with sign slots");
  for (std::size_t i = 0; i < v.magnitudes.size(); ++i) {
    if (!v.magnitudes[i]) continue;
    if (*v.magnitudes[i] <= 0)
      throw Error(ErrorKind::Precondition, "magnitude must be positive");
    if (v.signs[i] == 0)
      throw Error(ErrorKind::Precondition, "magnitude on a zero slot");
  }
}

LabeledComplex make_labeled_complex(Complex X, std::map<VertexToken, SignVector> labels) {
  const auto& verts = X.vertices();
  if (labels.size() != verts.size())
    throw Error(ErrorKind::Precondition, "label count differs from vertex count");
  for (const auto& v : verts)
    if (!labels.count(v))
      throw Error(ErrorKind::Precondition, "vertex '" + v + "' carries no label");
  std::size_t n = labels.begin()->second.size();
  std::map<SignVector, VertexToken> by_label;
  for (const auto& [tok, lab] : labels) {
    validate_sign_vector(lab);
    if (lab.size() != n)
      throw Error(ErrorKind::Precondition, "labels have inconsistent coordinate length");
    if (!by_label.emplace(lab, tok).second)
      throw Error(ErrorKind::Precondition, "labels are not injective at '" + tok + "'");
  }
  std::vector<NamedPermutation> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<VertexToken, VertexToken> m;
    for (const auto& [tok, lab] : labels) {
      auto it = by_label.find(lab.flipped(i));
      if (it == by_label.end())
        throw Error(ErrorKind::Precondition,
                    "labels are not closed under flipping coordinate " + std::to_string(i + 1));
      if (it->second != tok) m[tok] = it->second;
    }
    gens.push_back({"m" + std::to_string(i + 1), Permutation::from_map(std::move(m))});
  }
  LabeledComplex L;
  L.complex = std::move(X);
  L.labels = std::move(labels);
  L.action = GroupAction::from_generators(std::move(gens));
  L.n = static_cast<int>(n);
  return L;
}

LabeledComplex cross_polytope_sphere(int n) {
  if (n < 1) throw Error(ErrorKind::Range, "cross-polytope dimension must be at least 1");
  std::map<VertexToken, SignVector> labels;
  for (int i = 0; i < n; ++i)
    for (int sign : {+1, -1}) {
      SignVector lab;
      lab.signs.assign(n, 0);
      lab.signs[i] = sign;
      lab.magnitudes.assign(n, std::nullopt);
      lab.magnitudes[i] = Rational(1);
      labels.emplace((sign > 0 ? "+" : "-") + std::to_string(i + 1), std::move(lab));
    }
  std::vector<Simplex> facets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<VertexToken> toks;
    for (int i = 0; i < n; ++i)
      toks.push_back(((mask >> i) & 1 ? "-" : "+") + std::to_string(i + 1));
    facets.push_back(Simplex::of(toks));
  }
  return make_labeled_complex(complex_from_simplices(facets), std::move(labels));
}

bool support_bound_check(const LabeledComplex& L) {
  if (L.complex.vertices().size() != static_cast<std::size_t>(2 * L.n))
    throw Error(ErrorKind::Precondition, "vertex count is not twice the coordinate length");
  for (const auto& [tok, lab] : L.labels)
    if (lab.support() > 2) return false;
  return true;
}

std::vector<std::vector<int>> vertex_set_patterns(int n) {
  // partitions of the n coordinates whose full-orbit sizes 2^{s_i} total 2n
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part, long long orbit_total) -> void {
    if (remaining == 0) {
      if (orbit_total == 2LL * n) out.push_back(cur);
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p, orbit_total + (1LL << p));
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n, 0);
  return out;
}

long long vertex_set_choices(int n) {
  return static_cast<long long>(vertex_set_patterns(n).size());
}

long long missing_edge_lower_bound(int k) {
  return (1LL << (k - 1)) * ((1LL << k) - k - 1);
}

namespace {

// Full sign orbits (as token lists) of the labeled vertices, one entry per
// orbit, ordered by smallest member token.
std::vector<std::vector<VertexToken>> full_sign_orbits(const LabeledComplex& L) {
  std::map<SignVector, VertexToken> by_label;
  for (const auto& [tok, lab] : L.labels) by_label.emplace(lab, tok);
  std::vector<std::vector<VertexToken>> orbits;
  std::set<VertexToken> seen;
  for (const auto& [tok, lab] : L.labels) {
    if (seen.count(tok)) continue;
    std::vector<int> supp;
    for (std::size_t i = 0; i < lab.signs.size(); ++i)
      if (lab.signs[i] != 0) supp.push_back(static_cast<int>(i));
    std::vector<VertexToken> orbit;
    for (int mask = 0; mask < (1 << supp.size()); ++mask) {
      SignVector v = lab;
      for (std::size_t b = 0; b < supp.size(); ++b)
        if ((mask >> b) & 1) v.signs[supp[b]] = -v.signs[supp[b]];
      auto it = by_label.find(v);
      if (it == by_label.end())
        throw Error(ErrorKind::Precondition, "labels are not closed under sign changes");
      orbit.push_back(it->second);
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const auto& t : orbit) seen.insert(t);
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace

bool verify_missing_edge_bound(const LabeledComplex& L) {
  for (const auto& orbit : full_sign_orbits(L)) {
    int k = L.labels.at(orbit.front()).support();
    if (k < 3) continue;
    long long missing = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.size(); ++j)
        if (!L.complex.contains(Simplex::of({orbit[i], orbit[j]}))) ++missing;
    if (missing < missing_edge_lower_bound(k)) return false;
  }
  return true;
}

bool orbit_edges_single_flip(const LabeledComplex& L) {
  for (const auto& orbit : full_sign_orbits(L)) {
    if (L.labels.at(orbit.front()).support() < 3) continue;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        if (!L.complex.contains(Simplex::of({orbit[i], orbit[j]}))) continue;
        if (SignVector::sign_distance(L.labels.at(orbit[i]), L.labels.at(orbit[j])) != 1)
          return false;
      }
  }
  return true;
}

bool lemma33_inequality(int n) {
  if (n < 2) return false;
  return (1LL << n) * (2LL * n + 1) > binomial(n + 2, 2);
}

const char* vertex_set_type_name(VertexSetType t) {
  switch (t) {
    case VertexSetType::I: return "I";
    case VertexSetType::II: return "II";
    case VertexSetType::III: return "III";
    case VertexSetType::None: return "none";
  }
  return "?";
}

VertexSetType classify_8vertex_s3(const LabeledComplex& L) {
  if (L.complex.vertices().size() != 8 || L.n != 4)
    throw Error(ErrorKind::Precondition, "classification needs 8 vertices in 4 coordinates");
  // bucket the labels by support set
  std::map<std::vector<int>, std::vector<SignVector>> groups;
  for (const auto& [tok, lab] : L.labels) {
    std::vector<int> supp;
    for (std::size_t i = 0; i < lab.signs.size(); ++i)
      if (lab.signs[i] != 0) supp.push_back(static_cast<int>(i));
    groups[supp].push_back(lab);
  }
  auto full_orbit = [](const std::vector<SignVector>& g, std::size_t k) {
    if (g.size() != (1u << k)) return false;
    std::set<std::vector<int>> patterns;
    for (const auto& v : g) patterns.insert(v.signs);
    return patterns.size() == g.size();
  };
  std::vector<std::vector<int>> axes, pairs;
  for (const auto& [supp, g] : groups) {
    if (supp.size() == 1 && full_orbit(g, 1))
      axes.push_back(supp);
    else if (supp.size() == 2 && full_orbit(g, 2))
      pairs.push_back(supp);
    else
      return VertexSetType::None;
  }
  std::set<int> covered;
  for (const auto& s : axes) covered.insert(s.begin(), s.end());
  for (const auto& s : pairs) covered.insert(s.begin(), s.end());
  if (covered.size() != 4) return VertexSetType::None;
  if (pairs.size() == 2 && axes.empty()) return VertexSetType::I;
  if (pairs.size() == 1 && axes.size() == 2) return VertexSetType::II;
  if (pairs.empty() && axes.size() == 4) return VertexSetType::III;
  return VertexSetType::None;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

struct EnumVertexSet {
  std::vector<SignVector> labels;  // index = vertex id
};

// Labels of the full sign orbit over `coords`, zeros elsewhere.
void append_orbit(std::vector<SignVector>& out, int n, const std::vector<int>& coords,
                  const Rational& mag) {
  for (int mask = 0; mask < (1 << coords.size()); ++mask) {
    SignVector v;
    v.signs.assign(n, 0);
    v.magnitudes.assign(n, std::nullopt);
    for (std::size_t b = 0; b < coords.size(); ++b) {
      v.signs[coords[b]] = ((mask >> b) & 1) ? -1 : +1;
      v.magnitudes[coords[b]] = mag;
    }
    out.push_back(std::move(v));
  }
}

// Canonical coordinate assignment for a support pattern: parts take the next
// unused coordinates in order.
EnumVertexSet vertex_set_from_pattern(int n, const std::vector<int>& parts) {
  EnumVertexSet vs;
  int next = 0, block = 0;
  for (int p : parts) {
    std::vector<int> coords;
    for (int i = 0; i < p; ++i) coords.push_back(next++);
    ++block;
    append_orbit(vs.labels, n, coords, p == 1 ? Rational(1) : Rational(block));
  }
  return vs;
}

// All multisets of full sign-orbit blocks totaling exactly 2n labels, with no
// structural restrictions; injectivity and coordinate coverage are filtered
// afterwards, mirroring the geometric constraints rather than the support
// bound under test.
std::vector<EnumVertexSet> raw_vertex_sets(int n) {
  std::vector<EnumVertexSet> out;
  std::vector<std::vector<int>> blocks;  // chosen blocks as coordinate lists
  auto emit = [&]() {
    EnumVertexSet vs;
    int id = 0;
    std::set<SignVector> seen;
    for (const auto& coords : blocks) {
      ++id;
      append_orbit(vs.labels, n, coords, coords.size() == 1 ? Rational(1) : Rational(id));
    }
    for (const auto& lab : vs.labels)
      if (!seen.insert(lab).second) return;  // coincident labels: invalid set
    std::set<int> covered;
    for (const auto& coords : blocks) covered.insert(coords.begin(), coords.end());
    if (static_cast<int>(covered.size()) != n) return;  // spans a proper subspace
    out.push_back(std::move(vs));
  };
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> coords;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) coords.push_back(i);
    subsets.push_back(std::move(coords));
  }
  auto rec = [&](auto&& self, std::size_t min_idx, long long remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (std::size_t i = min_idx; i < subsets.size(); ++i) {
      long long w = 1LL << subsets[i].size();
      if (w > remaining) continue;
      blocks.push_back(subsets[i]);
      self(self, i, remaining - w);
      blocks.pop_back();
    }
  };
  rec(rec, 0, 2LL * n);
  return out;
}

// Canonical form of a candidate under signed coordinate permutations with
// magnitude symbols renumbered by first appearance.
std::string canonical_candidate_key(int n, const std::vector<SignVector>& labels,
                                    const std::vector<std::vector<int>>& facets) {
  std::string best;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<SignVector> tl(labels.size());
      for (std::size_t v = 0; v < labels.size(); ++v) {
        SignVector t;
        t.signs.assign(n, 0);
        t.magnitudes.assign(n, std::nullopt);
        for (int i = 0; i < n; ++i) {
          int s = labels[v].signs[i];
          if ((mask >> i) & 1) s = -s;
          t.signs[perm[i]] = s;
          if (i < static_cast<int>(labels[v].magnitudes.size()))
            t.magnitudes[perm[i]] = labels[v].magnitudes[i];
        }
        tl[v] = std::move(t);
      }
      std::vector<int> order(labels.size());
      for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return tl[a] < tl[b]; });
      std::vector<int> rank(labels.size());
      for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos);
      std::map<Rational, int> mag_ids;
      std::string key;
      for (int v : order) {
        for (int i = 0; i < n; ++i) {
          int s = tl[v].signs[i];
          key += (s == 0) ? '0' : (s > 0 ? '+' : '-');
          if (s != 0 && tl[v].magnitudes[i]) {
            auto [it, fresh] =
                mag_ids.emplace(*tl[v].magnitudes[i], static_cast<int>(mag_ids.size()));
            key += 'a' + static_cast<char>(it->second % 26);
          }
        }
        key += ';';
      }
      key += '|';
      std::vector<std::vector<int>> tf;
      for (const auto& f : facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(rank[v]);
        std::sort(g.begin(), g.end());
        tf.push_back(std::move(g));
      }
      std::sort(tf.begin(), tf.end());
      for (const auto& f : tf) {
        for (int v : f) key += std::to_string(v) + ",";
        key += ';';
      }
      if (best.empty() || key < best) best = std::move(key);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct SubsetResult {
  bool survivor = false;
  bool indeterminate = false;
  bool checked = false;
  std::string key;
  std::vector<std::vector<int>> facets;  // by vertex id, when survivor
};

}  // namespace

SphereEnumeration enumerate_equivariant_spheres(int n, bool support_filter, int jobs) {
  if (n < 2 || n > 4)
    throw Error(ErrorKind::Range, "sphere enumeration supports 2 <= n <= 4");
  if (jobs < 1) jobs = 1;

  std::vector<EnumVertexSet> vertex_sets;
  if (support_filter) {
    for (const auto& pattern : vertex_set_patterns(n))
      vertex_sets.push_back(vertex_set_from_pattern(n, pattern));
  } else {
    vertex_sets = raw_vertex_sets(n);
  }

  SphereEnumeration result;
  std::map<std::string, std::pair<std::vector<SignVector>, std::vector<std::vector<int>>>>
      survivors;

  for (const auto& vs : vertex_sets) {
    const int nv = static_cast<int>(vs.labels.size());
    std::map<SignVector, int> index;
    for (int v = 0; v < nv; ++v) index.emplace(vs.labels[v], v);

    // group elements as vertex permutations
    std::vector<std::vector<int>> elem(1 << n, std::vector<int>(nv));
    for (int g = 0; g < (1 << n); ++g)
      for (int v = 0; v < nv; ++v) {
        SignVector t = vs.labels[v];
        for (int i = 0; i < n; ++i)
          if ((g >> i) & 1) t.signs[i] = -t.signs[i];
        elem[g][v] = index.at(t);
      }

    // antipodal pairs
    std::vector<std::pair<int, int>> pairs;
    {
      std::set<int> taken;
      for (int v = 0; v < nv; ++v) {
        if (taken.count(v)) continue;
        int w = index.at(vs.labels[v].negated());
        taken.insert(v);
        taken.insert(w);
        pairs.emplace_back(v, w);
      }
    }
    if (static_cast<int>(pairs.size()) != n) continue;  // cannot host (n-1)-facets

    // candidate facets: one vertex per antipodal pair
    std::vector<std::uint32_t> transversals;
    for (int choice = 0; choice < (1 << n); ++choice) {
      std::uint32_t m = 0;
      for (int i = 0; i < n; ++i)
        m |= 1u << (((choice >> i) & 1) ? pairs[i].second : pairs[i].first);
      transversals.push_back(m);
    }

    // orbits of candidate facets under the sign action
    auto apply = [&](const std::vector<int>& p, std::uint32_t m) {
      std::uint32_t r = 0;
      for (int v = 0; v < nv; ++v)
        if ((m >> v) & 1) r |= 1u << p[v];
      return r;
    };
    std::vector<std::vector<std::uint32_t>> orbits;
    {
      std::set<std::uint32_t> seen;
      for (std::uint32_t t : transversals) {
        if (seen.count(t)) continue;
        std::set<std::uint32_t> orb;
        for (int g = 0; g < (1 << n); ++g) orb.insert(apply(elem[g], t));
        for (std::uint32_t m : orb) seen.insert(m);
        orbits.emplace_back(orb.begin(), orb.end());
      }
    }
    std::sort(orbits.begin(), orbits.end());

    const std::uint32_t all_vertices = (nv >= 32) ? 0xffffffffu : ((1u << nv) - 1);
    const std::size_t subset_count = (1ull << orbits.size());
    std::vector<SubsetResult> results(subset_count);

    auto run_subset = [&](std::size_t s) {
      SubsetResult& r = results[s];
      std::uint32_t used = 0;
      std::size_t facet_count = 0;
      for (std::size_t o = 0; o < orbits.size(); ++o)
        if ((s >> o) & 1) {
          facet_count += orbits[o].size();
          for (std::uint32_t m : orbits[o]) used |= m;
        }
      if (used != all_vertices) return;
      r.checked = true;

      std::vector<std::vector<int>> facets;
      facets.reserve(facet_count);
      std::vector<Simplex> simplices;
      simplices.reserve(facet_count);
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (!((s >> o) & 1)) continue;
        for (std::uint32_t m : orbits[o]) {
          std::vector<int> ids;
          std::vector<VertexToken> toks;
          for (int v = 0; v < nv; ++v)
            if ((m >> v) & 1) {
              ids.push_back(v);
              toks.push_back(vs.labels[v].str());
            }
          facets.push_back(std::move(ids));
          simplices.push_back(Simplex::of(toks));
        }
      }
      Complex X = complex_from_simplices(simplices);
      if (!is_closed_pseudomanifold(X)) return;
      SphereVerdict verdict = certify_sphere(X);
      if (verdict == SphereVerdict::Indeterminate) {
        r.indeterminate = true;
        return;
      }
      if (verdict != SphereVerdict::Yes) return;
      std::map<VertexToken, SignVector> labels;
      for (int v = 0; v < nv; ++v) labels.emplace(vs.labels[v].str(), vs.labels[v]);
      LabeledComplex LC = make_labeled_complex(X, std::move(labels));
      if (!verify_missing_edge_bound(LC)) return;
      r.survivor = true;
      r.key = canonical_candidate_key(n, vs.labels, facets);
      r.facets = std::move(facets);
    };

    if (jobs == 1 || subset_count < 16) {
      for (std::size_t s = 1; s < subset_count; ++s) run_subset(s);
    } else {
      std::atomic<std::size_t> next{1};
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&]() {
          for (std::size_t s = next.fetch_add(1); s < subset_count; s = next.fetch_add(1))
            run_subset(s);
        });
      for (auto& t : pool) t.join();
    }

    for (const auto& r : results) {
      result.candidates_checked += r.checked;
      result.indeterminate += r.indeterminate;
      if (r.survivor && !survivors.count(r.key)) survivors.emplace(r.key, std::make_pair(vs.labels, r.facets));
    }
  }

  for (const auto& [key, cand] : survivors) {
    const auto& [labels, facets] = cand;
    std::vector<Simplex> simplices;
    std::map<VertexToken, SignVector> lmap;
    for (const auto& lab : labels) lmap.emplace(lab.str(), lab);
    for (const auto& f : facets) {
      std::vector<VertexToken> toks;
      for (int v : f) toks.push_back(labels[v].str());
      simplices.push_back(Simplex::of(toks));
    }
    result.survivors.push_back(
        make_labeled_complex(complex_from_simplices(simplices), std::move(lmap)));
  }

  // count survivors up to plain complex isomorphism
  std::vector<const Complex*> reps;
  for (const auto& s : result.survivors) {
    bool fresh = true;
    for (const Complex* r : reps)
      if (find_isomorphism(*r, s.complex)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(&s.complex);
  }
  result.iso_classes = reps.size();
  return result;
}

LabeledComplex suspension_action(const LabeledComplex& L) {
  int n = L.n;
  VertexToken north = "+" + std::to_string(n + 1);
  VertexToken south = "-" + std::to_string(n + 1);
  while (L.complex.has_vertex(north) || L.complex.has_vertex(south)) {
    north += "'";
    south += "'";
  }
  std::map<VertexToken, SignVector> labels;
  for (const auto& [tok, lab] : L.labels) {
    SignVector t = lab;
    t.signs.push_back(0);
    if (!t.magnitudes.empty()) t.magnitudes.push_back(std::nullopt);
    labels.emplace(tok, std::move(t));
  }
  for (auto [tok, sign] : {std::pair{north, +1}, {south, -1}}) {
    SignVector t;
    t.signs.assign(n + 1, 0);
    t.signs[n] = sign;
    t.magnitudes.assign(n + 1, std::nullopt);
    t.magnitudes[n] = Rational(1);
    labels.emplace(tok, std::move(t));
  }
  std::vector<Simplex> facets;
  for (const auto& f : L.complex.facets()) {
    facets.push_back(f.with(north));
    facets.push_back(f.with(south));
  }
  LabeledComplex out = make_labeled_complex(complex_from_simplices(facets), std::move(labels));
  if (auto rep = is_equivariant(out.complex, out.action); !rep.ok)
    throw Error(ErrorKind::Equivariance, "suspension lost equivariance");
  return out;
}

}  // namespace eqtri
