#include <set>

#include "doctest.h"
#include "eqtri/action.hpp"
#include "eqtri/catalog.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/iso.hpp"
#include "test_helpers.hpp"

using namespace eqtri;
using eqtri::testing::C;
using eqtri::testing::S;

namespace {

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

TEST_SUITE("iso") {

TEST_CASE("identity on self") {
  Complex oct = C({"ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"});
  auto m = find_isomorphism(oct, oct);
  REQUIRE(m.has_value());
  for (const auto& [k, v] : *m) CHECK(k == v);
}

TEST_CASE("octahedron is isomorphic to the suspension of a square") {
  Complex oct = C({"ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"});
  Complex square = C({"pq", "qr", "rs", "ps"});
  Complex susp = suspension(square);
  auto m = find_isomorphism(oct, susp);
  REQUIRE(m.has_value());
  CHECK(relabel(oct, *m) == susp);

  // and in the other direction
  auto back = find_isomorphism(susp, oct);
  REQUIRE(back.has_value());
  CHECK(relabel(susp, *back) == oct);
}

TEST_CASE("non-isomorphic pairs") {
  Complex K14 = load_fixture("K14").complex;
  Complex K11 = load_fixture("K11").complex;
  CHECK_FALSE(find_isomorphism(K14, K11).has_value());  // different f-vectors
  CHECK_FALSE(find_isomorphism(K11, K14).has_value());

  // same f-vector, different structure: square+segment vs path of 3 edges... use
  // two graphs with f = (1, 6, 6): hexagon vs two triangles
  Complex hexagon = C({"ab", "bc", "cd", "de", "ef", "fa"});
  Complex two_triangles = C({"ab", "bc", "ac", "de", "ef", "df"});
  CHECK(f_vector(hexagon) == f_vector(two_triangles));
  CHECK_FALSE(find_isomorphism(hexagon, two_triangles).has_value());
}

TEST_CASE("every isomorphism returned is valid") {
  Complex oct = C({"ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"});
  Complex susp = suspension(C({"pq", "qr", "rs", "ps"}));
  auto all = all_isomorphisms(oct, susp);
  CHECK(all.size() == 48);  // as many as automorphisms
  std::set<IsoMap> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (const auto& m : all) CHECK(relabel(oct, m) == susp);
}

TEST_CASE("automorphism groups of the catalog") {
  CHECK(automorphism_group(load_fixture("K16").complex).order == 32);
  CHECK(automorphism_group(load_fixture("K14").complex).order == 48);
  CHECK(automorphism_group(load_fixture("K11").complex).order == 48);
}

TEST_CASE("automorphism group structure") {
  Complex oct = C({"ace", "acf", "ade", "adf", "bce", "bcf", "bde", "bdf"});
  AutomorphismGroup g = automorphism_group(oct);
  CHECK(g.order == 48);
  CHECK(g.elements.size() == 48);
  REQUIRE(!g.elements.empty());
  CHECK(g.elements[0].identity());
  // closure under composition
  std::set<Permutation> members(g.elements.begin(), g.elements.end());
  for (const auto& a : g.generators)
    for (const auto& b : g.generators) CHECK(members.count(a.compose(b)) == 1);
  // generators generate: breadth-first closure of the generator set
  std::set<Permutation> span = {Permutation()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> frontier(span.begin(), span.end());
    for (const auto& s : frontier)
      for (const auto& gen : g.generators)
        if (span.insert(s.compose(gen)).second) grew = true;
  }
  CHECK(span == members);
}

TEST_CASE("triangle boundary has the full symmetric group") {
  CHECK(automorphism_group(C({"ab", "bc", "ac"})).order == 6);
  CHECK(automorphism_group(eqtri::testing::boundary_simplex(3)).order == 24);
}

TEST_CASE("catalog group orders divide the automorphism orders") {
  for (const char* id : {"K16", "K14", "K11"}) {
    Fixture fx = load_fixture(id);
    AutomorphismGroup g = automorphism_group(fx.complex);
    CHECK(g.order % fx.action->order() == 0);
  }
}

TEST_CASE("is_subaction") {
  Fixture K = load_fixture("K16");
  CHECK(is_subaction(K.complex, *K.action));
  Fixture K11 = load_fixture("K11");
  CHECK(is_subaction(K11.complex, *K11.action));

  GroupAction bad = GroupAction::from_generators(
      {{"g", Permutation::from_cycles({{"5", "7"}})}});
  CHECK_FALSE(is_subaction(K.complex, bad));

  // trivial action is always a subaction
  CHECK(is_subaction(K.complex, GroupAction()));
}

}  // TEST_SUITE
