// Randomized structural checks: identities that must hold for every complex,
// exercised over a deterministic stream of small random inputs plus a few
// curated degenerate shapes.
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "eqtri/catalog.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/gf2.hpp"
#include "eqtri/iso.hpp"
#include "eqtri/quotient.hpp"
#include "test_helpers.hpp"

using namespace eqtri;
using eqtri::testing::C;

namespace {

// rng() % k instead of std::uniform_int_distribution keeps the stream
// identical across standard library implementations.
int roll(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

Complex random_complex(std::mt19937& rng, char base = 'a') {
  int n = roll(rng, 3, 9);
  int count = roll(rng, 1, 9);
  std::vector<std::vector<VertexToken>> fs;
  for (int c = 0; c < count; ++c) {
    int k = std::min(roll(rng, 1, 4), n);
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < k) chosen.insert(roll(rng, 0, n - 1));
    std::vector<VertexToken> f;
    for (int i : chosen) f.emplace_back(1, static_cast<char>(base + i));
    fs.push_back(std::move(f));
  }
  return complex_from_facets(fs);
}

std::vector<Complex> curated() {
  return {
      C({"a"}),
      C({"ab"}),
      C({"ab", "bc", "ca"}),
      C({"abc"}),
      C({"abc", "abd", "acd", "bcd"}),
      C({"abc", "def"}),          // disconnected
      C({"abc", "bcd", "de"}),    // mixed dimension
      C({"ab", "cd", "e"}),       // isolated pieces
  };
}

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Complex relabel(const Complex& X, const IsoMap& m) {
  std::vector<Simplex> fs;
  for (const auto& f : X.facets()) {
    std::vector<VertexToken> vs;
    for (const auto& v : f.vertices()) vs.push_back(m.at(v));
    fs.push_back(Simplex::of(vs));
  }
  return complex_from_simplices(std::move(fs));
}

}  // namespace

TEST_SUITE("property") {

TEST_CASE("closure, star/link/antistar identities on random complexes") {
  std::mt19937 rng(20240811);
  std::vector<Complex> inputs = curated();
  for (int t = 0; t < 120; ++t) inputs.push_back(random_complex(rng));
  for (const Complex& X : inputs) {
    CAPTURE(serialize_complex(X));
    // closure under taking subsets
    for (int k = 1; k <= X.dim(); ++k)
      for (const auto& f : X.faces(k))
        for (const auto& v : f.vertices()) CHECK(X.contains(f.without(v)));
    for (const auto& v : X.vertices()) {
      Complex st = star(X, Simplex::of({v}));
      Complex lk = link(X, Simplex::of({v}));
      // the star is the cone over the link
      CHECK(st == cone(v, lk));
      CHECK(degree(X, Simplex::of({v})) == static_cast<long long>(lk.vertices().size()));
      // star and antistar facets reassemble the complex
      std::vector<Simplex> both = st.facets();
      const Complex as = antistar(X, v);
      both.insert(both.end(), as.facets().begin(), as.facets().end());
      CHECK(complex_from_simplices(both) == X);
      CHECK_FALSE(as.has_vertex(v));
    }
  }
}

TEST_CASE("boundary squared vanishes and Euler equals the Betti alternation") {
  std::mt19937 rng(424242);
  std::vector<Complex> inputs = curated();
  for (int t = 0; t < 60; ++t) inputs.push_back(random_complex(rng));
  for (const Complex& X : inputs) {
    CAPTURE(serialize_complex(X));
    for (int k = 1; k < X.dim() + 1; ++k) {
      if (k + 1 > X.dim()) break;
      Gf2Matrix dk = boundary_matrix(X, k);
      Gf2Matrix dk1 = boundary_matrix(X, k + 1);
      for (std::size_t r = 0; r < dk.rows(); ++r)
        for (std::size_t c = 0; c < dk1.cols(); ++c) {
          bool sum = false;
          for (std::size_t m = 0; m < dk.cols(); ++m)
            sum ^= dk.get(r, m) && dk1.get(m, c);
          CHECK_FALSE(sum);
        }
    }
    BettiProfile b = betti_gf2(X);
    long long alt = 0, sign = 1;
    for (long long bk : b.b) {
      alt += sign * bk;
      sign = -sign;
    }
    CHECK(alt == euler_characteristic(X));
    CHECK(b.b[0] >= 1);  // at least one component
  }
}

TEST_CASE("suspension and join obey the f-vector convolution") {
  std::mt19937 rng(777);
  for (int t = 0; t < 60; ++t) {
    Complex X = random_complex(rng, 'a');
    Complex Y = random_complex(rng, 'A');
    CAPTURE(serialize_complex(X));
    CAPTURE(serialize_complex(Y));
    Complex J = join_complexes(X, Y);
    CHECK(f_vector(J).entries == convolve(f_vector(X).entries, f_vector(Y).entries));
    CHECK(J.dim() == X.dim() + Y.dim() + 1);
    CHECK(euler_characteristic(J) ==
          euler_characteristic(X) + euler_characteristic(Y) -
              euler_characteristic(X) * euler_characteristic(Y));
    Complex S = suspension(X);
    CHECK(f_vector(S).entries ==
          convolve(f_vector(X).entries, std::vector<long long>{1, 2}));
    CHECK(S.dim() == X.dim() + 1);
  }
}

TEST_CASE("isomorphism survives random relabeling") {
  std::mt19937 rng(90125);
  for (int t = 0; t < 40; ++t) {
    Complex X = random_complex(rng);
    CAPTURE(serialize_complex(X));
    std::vector<VertexToken> verts = X.vertices();
    std::vector<VertexToken> image;
    for (std::size_t i = 0; i < verts.size(); ++i)
      image.push_back("w" + std::to_string(i));
    std::shuffle(image.begin(), image.end(), rng);
    IsoMap m;
    for (std::size_t i = 0; i < verts.size(); ++i) m[verts[i]] = image[i];
    Complex Y = relabel(X, m);
    CHECK(f_vector(Y).entries == f_vector(X).entries);
    CHECK(X.pure() == Y.pure());
    if (X.pure()) {
      CHECK(is_closed_pseudomanifold(X) == is_closed_pseudomanifold(Y));
    } else {
      CHECK_THROWS_AS(is_closed_pseudomanifold(X), Error);
      CHECK_THROWS_AS(is_closed_pseudomanifold(Y), Error);
    }
    auto found = find_isomorphism(X, Y);
    REQUIRE(found.has_value());
    CHECK(relabel(X, *found) == Y);
    CHECK(find_isomorphism(Y, X).has_value());
  }
}

TEST_CASE("serialization round-trips arbitrary complexes") {
  std::mt19937 rng(31337);
  std::vector<Complex> inputs = curated();
  for (int t = 0; t < 60; ++t) inputs.push_back(random_complex(rng));
  for (const Complex& X : inputs) {
    std::string text = serialize_complex(X);
    CHECK(parse_complex(text) == X);
    CHECK(serialize_complex(parse_complex(text)) == text);
  }
}

TEST_CASE("folding stays orbit-constant under random axis rescaling") {
  std::mt19937 rng(1123581321);
  const Rational choices[] = {Rational(1), Rational(1, 2), Rational(2), Rational(3),
                              Rational(2, 3), Rational(5, 4)};
  for (int t = 0; t < 25; ++t) {
    Rational c[3];
    for (auto& x : c) x = choices[roll(rng, 0, 5)];
    // octahedron on +-c_i e_i with every facet split at its barycenter
    EmbeddedComplex E;
    std::vector<std::vector<VertexToken>> facets;
    for (int i = 1; i <= 3; ++i) {
      RationalPoint p(3, Rational(0));
      p[i - 1] = c[i - 1];
      E.position["+" + std::to_string(i)] = p;
      p[i - 1] = -c[i - 1];
      E.position["-" + std::to_string(i)] = p;
    }
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
          auto axis = [](int i, int s) {
            return std::string(s > 0 ? "+" : "-") + std::to_string(i);
          };
          VertexToken b = "b" + std::string(s1 > 0 ? "p" : "n") +
                          (s2 > 0 ? "p" : "n") + (s3 > 0 ? "p" : "n");
          E.position[b] = {Rational(s1) * c[0] / 3, Rational(s2) * c[1] / 3,
                           Rational(s3) * c[2] / 3};
          facets.push_back({b, axis(1, s1), axis(2, s2)});
          facets.push_back({b, axis(1, s1), axis(3, s3)});
          facets.push_back({b, axis(2, s2), axis(3, s3)});
        }
    E.complex = complex_from_facets(facets);
    E.reflections = {0, 1, 2};
    CAPTURE(t);
    validate_embedded_complex(E);
    GroupAction a = embedded_action(E);
    for (const auto& orbit : facet_orbits(E.complex, a)) {
      FoldResult rep = fold_facet_full(E, orbit[0]);
      for (const auto& f : orbit) {
        FoldResult fr = fold_facet_full(E, f);
        CHECK(fr.simplex == rep.simplex);
        CHECK(fr.splits == rep.splits);
      }
    }
    QuotientResult Q = quotient_triangulation(E);
    CHECK(Q.facet_orbit_total == 3);
    CHECK(Q.complex.facets().size() == 3);
  }
}

}  // TEST_SUITE
