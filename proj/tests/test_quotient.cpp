#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "eqtri/catalog.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/errors.hpp"
#include "eqtri/quotient.hpp"
#include "eqtri/spheres.hpp"

using namespace eqtri;

namespace {

RationalPoint pt(std::vector<Rational> coords) { return coords; }

GeometricSimplex gs(std::vector<RationalPoint> points) { return {std::move(points)}; }

ErrorKind kind_of(const std::function<void()>& run) {
  try {
    run();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Parse;
}

// The diametral axis segment: one edge through the origin, the configuration
// every reflection fixes setwise.
EmbeddedComplex axis_segment() {
  EmbeddedComplex E;
  E.complex = complex_from_facets({{"a", "b"}});
  E.position["a"] = pt({1, 0});
  E.position["b"] = pt({-1, 0});
  E.reflections = {0, 1};
  return E;
}

EmbeddedComplex embedded_fixture(const std::string& id) {
  Fixture fx = load_fixture(id);
  REQUIRE(fx.positions.has_value());
  EmbeddedComplex E;
  E.complex = fx.complex;
  E.position = *fx.positions;
  for (std::size_t i = 0; i < E.ambient_dim(); ++i) E.reflections.push_back(static_cast<int>(i));
  return E;
}

// Octahedron with every facet split at its barycenter: still an equivariant
// 2-sphere, now with three facet orbits of size eight.
EmbeddedComplex refined_octahedron() {
  EmbeddedComplex E = embedded_fixture("XP3");
  std::vector<std::vector<VertexToken>> facets;
  std::map<VertexToken, RationalPoint> pos = E.position;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) {
        auto axis = [&](int i, int s) { return std::string(s > 0 ? "+" : "-") + std::to_string(i); };
        VertexToken b = "b" + std::string(s1 > 0 ? "p" : "n") + (s2 > 0 ? "p" : "n") +
                        (s3 > 0 ? "p" : "n");
        pos[b] = pt({Rational(s1, 3), Rational(s2, 3), Rational(s3, 3)});
        VertexToken v1 = axis(1, s1), v2 = axis(2, s2), v3 = axis(3, s3);
        facets.push_back({b, v1, v2});
        facets.push_back({b, v1, v3});
        facets.push_back({b, v2, v3});
      }
  EmbeddedComplex R;
  R.complex = complex_from_facets(facets);
  R.position = std::move(pos);
  R.reflections = {0, 1, 2};
  return R;
}

// Bipyramid over the 45-degree-rotated square: an equivariant 2-sphere whose
// equatorial edges cross the coordinate hyperplanes, so folding must split.
EmbeddedComplex rotated_bipyramid() {
  EmbeddedComplex E;
  E.complex = complex_from_facets({{"p", "q", "t"}, {"q", "r", "t"}, {"r", "s", "t"},
                                   {"s", "p", "t"}, {"p", "q", "u"}, {"q", "r", "u"},
                                   {"r", "s", "u"}, {"s", "p", "u"}});
  E.position["p"] = pt({Rational(1, 2), Rational(1, 2), 0});
  E.position["q"] = pt({Rational(-1, 2), Rational(1, 2), 0});
  E.position["r"] = pt({Rational(-1, 2), Rational(-1, 2), 0});
  E.position["s"] = pt({Rational(1, 2), Rational(-1, 2), 0});
  E.position["t"] = pt({0, 0, 1});
  E.position["u"] = pt({0, 0, -1});
  E.reflections = {0, 1, 2};
  return E;
}

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("gram determinant is the squared scaled volume") {
  CHECK(gram_det(gs({pt({5, 7})})) == 1);                     // a point
  CHECK(gram_det(gs({pt({0, 0}), pt({3, 4})})) == 25);        // length 5 edge
  CHECK(gram_det(gs({pt({-1, 0}), pt({1, 0})})) == 4);        // length 2 edge
  CHECK(gram_det(gs({pt({0}), pt({Rational(1, 2)})})) == Rational(1, 4));
  CHECK(gram_det(gs({pt({0, 0}), pt({1, 0}), pt({0, 1})})) == 1);  // (2! * 1/2)^2
  // unit tetrahedron: (3! * 1/6)^2 = 1
  CHECK(gram_det(gs({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})})) == 1);
}

TEST_CASE("geometric simplex validation and multiset equality") {
  CHECK_NOTHROW(validate_geometric_simplex(gs({pt({1, 0}), pt({0, 1})})));
  CHECK(kind_of([] {
          validate_geometric_simplex(gs({pt({1, 0}), pt({1, 0, 0})}));
        }) == ErrorKind::Precondition);  // mixed ambient dimension
  CHECK(kind_of([] {
          validate_geometric_simplex(gs({pt({0, 0}), pt({1, 1}), pt({2, 2})}));
        }) == ErrorKind::Precondition);  // collinear
  CHECK(kind_of([] {
          validate_geometric_simplex(gs({pt({1, 0}), pt({1, 0})}));
        }) == ErrorKind::Precondition);  // repeated point
  CHECK(gs({pt({1, 0}), pt({-1, 0})}) == gs({pt({-1, 0}), pt({1, 0})}));
  CHECK_FALSE(gs({pt({1, 0}), pt({-1, 0})}) == gs({pt({1, 0}), pt({0, 1})}));
}

TEST_CASE("hyperplane split: segment, triangle, tetrahedron") {
  auto [sp, sn] = split_simplex_by_hyperplane(gs({pt({-1, 0}), pt({1, 0})}), 0);
  CHECK(sp == gs({pt({0, 0}), pt({1, 0})}));
  CHECK(sn == gs({pt({-1, 0}), pt({0, 0})}));

  GeometricSimplex tri = gs({pt({1, 0}), pt({-1, 0}), pt({0, 1})});
  auto [tp, tn] = split_simplex_by_hyperplane(tri, 0);
  CHECK(tp == gs({pt({1, 0}), pt({0, 0}), pt({0, 1})}));
  CHECK(tn == gs({pt({-1, 0}), pt({0, 0}), pt({0, 1})}));

  GeometricSimplex tet =
      gs({pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  auto [p, n] = split_simplex_by_hyperplane(tet, 0);
  std::multiset<std::string> shared;  // the face on x_0 = 0 common to both halves
  for (const auto& half : {p, n})
    for (const auto& v : half.points)
      if (v[0] == 0) shared.insert(format_point(v));
  CHECK(shared == std::multiset<std::string>{"0,0,0", "0,0,0", "0,0,1", "0,0,1", "0,1,0",
                                             "0,1,0"});
}

TEST_CASE("split halves reassemble the volume and are swapped by the flip") {
  std::vector<GeometricSimplex> inputs = {
      gs({pt({-1, 0}), pt({1, 0})}),
      gs({pt({1, 0}), pt({-1, 0}), pt({0, 1})}),
      gs({pt({1, 0, 0}), pt({-1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}),
      gs({pt({Rational(1, 2), Rational(1, 2), 0}), pt({Rational(-1, 2), Rational(1, 2), 0}),
          pt({0, 0, 1})}),
  };
  for (const auto& s : inputs) {
    CAPTURE(format_point(s.points[0]));
    auto [p, n] = split_simplex_by_hyperplane(s, 0);
    // equal halves: gram scales by (1/2)^2 per k! * vol
    CHECK(gram_det(p) * 4 == gram_det(s));
    CHECK(gram_det(n) * 4 == gram_det(s));
    GeometricSimplex flipped = p;
    for (auto& q : flipped.points) q[0] = -q[0];
    CHECK(flipped == n);
    for (const auto& q : p.points) CHECK(q[0] >= 0);
    for (const auto& q : n.points) CHECK(q[0] <= 0);
  }
}

TEST_CASE("split rejects bad coordinates, asymmetry, and on-plane simplices") {
  GeometricSimplex seg = gs({pt({-1, 0}), pt({1, 0})});
  CHECK(kind_of([&] { split_simplex_by_hyperplane(seg, 2); }) == ErrorKind::Range);
  CHECK(kind_of([&] { split_simplex_by_hyperplane(seg, -1); }) == ErrorKind::Range);
  // not setwise invariant under the flip
  CHECK(kind_of([] {
          split_simplex_by_hyperplane(gs({pt({1, 0}), pt({0, 1}), pt({1, 1})}), 0);
        }) == ErrorKind::Equivariance);
  // invariant but with no vertex off the hyperplane: nothing to cut
  try {
    split_simplex_by_hyperplane(gs({pt({0, 1}), pt({0, -1})}), 0);
    FAIL("expected a geometry error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Geometry);
    CHECK(std::string(e.what()).find("found 0") != std::string::npos);
  }
}

TEST_CASE("embedded complex validation accepts the catalog embeddings") {
  for (const char* id : {"XP1", "XP2", "XP3", "XP4"}) {
    EmbeddedComplex E = embedded_fixture(id);
    CHECK_NOTHROW(validate_embedded_complex(E));
  }
  CHECK_NOTHROW(validate_embedded_complex(refined_octahedron()));
  CHECK_NOTHROW(validate_embedded_complex(rotated_bipyramid()));
  // the diametral axis edge is the one allowed origin-meeting face
  CHECK_NOTHROW(validate_embedded_complex(axis_segment()));
}

TEST_CASE("embedded complex validation error taxonomy") {
  auto base = [] {
    EmbeddedComplex E;
    E.complex = complex_from_facets({{"a", "b"}});
    E.position["a"] = pt({1, 0});
    E.position["b"] = pt({-1, 0});
    return E;
  };

  EmbeddedComplex origin = base();
  origin.position["a"] = pt({0, 0});
  CHECK(kind_of([&] { validate_embedded_complex(origin); }) == ErrorKind::Precondition);

  EmbeddedComplex missing = base();
  missing.position.erase("b");
  missing.position["z"] = pt({2, 0});
  CHECK(kind_of([&] { validate_embedded_complex(missing); }) == ErrorKind::Precondition);

  EmbeddedComplex mixed = base();
  mixed.position["b"] = pt({-1, 0, 0});
  CHECK(kind_of([&] { validate_embedded_complex(mixed); }) == ErrorKind::Precondition);

  EmbeddedComplex shared = base();
  shared.position["b"] = pt({1, 0});
  CHECK(kind_of([&] { validate_embedded_complex(shared); }) == ErrorKind::Precondition);

  EmbeddedComplex dup = base();
  dup.reflections = {0, 0};
  CHECK(kind_of([&] { validate_embedded_complex(dup); }) == ErrorKind::Precondition);

  EmbeddedComplex range = base();
  range.reflections = {2};
  CHECK(kind_of([&] { validate_embedded_complex(range); }) == ErrorKind::Range);

  // flip image of a vertex position is not a vertex position
  EmbeddedComplex drift = base();
  drift.position["b"] = pt({2, 0});
  drift.reflections = {0};
  CHECK(kind_of([&] { validate_embedded_complex(drift); }) == ErrorKind::Equivariance);

  // positions permute but the facet set does not
  EmbeddedComplex broken;
  broken.complex = complex_from_facets({{"a", "b"}, {"a", "c"}, {"d"}});
  broken.position["a"] = pt({1, 1});
  broken.position["b"] = pt({1, -1});
  broken.position["c"] = pt({-1, 1});
  broken.position["d"] = pt({-1, -1});
  broken.reflections = {0};
  try {
    validate_embedded_complex(broken);
    FAIL("expected an equivariance error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Equivariance);
    CHECK(std::string(e.what()).find("automorphism") != std::string::npos);
  }
}

TEST_CASE("faces through the origin are rejected unless they are axis edges") {
  EmbeddedComplex diag;  // edge through the origin, off-axis
  diag.complex = complex_from_facets({{"a", "b"}});
  diag.position["a"] = pt({1, 1});
  diag.position["b"] = pt({-1, -1});
  try {
    validate_embedded_complex(diag);
    FAIL("expected a geometry error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Geometry);
    CHECK(std::string(e.what()).find("meets the origin") != std::string::npos);
  }

  EmbeddedComplex tri;  // origin interior to a triangle
  tri.complex = complex_from_facets({{"a", "b", "c"}});
  tri.position["a"] = pt({1, 0});
  tri.position["b"] = pt({-1, 1});
  tri.position["c"] = pt({-1, -1});
  CHECK(kind_of([&] { validate_embedded_complex(tri); }) == ErrorKind::Geometry);
}

TEST_CASE("embedded action recovers the sign action") {
  EmbeddedComplex E = embedded_fixture("XP3");
  GroupAction a = embedded_action(E);
  CHECK(a.rank() == 3);
  CHECK(a.order() == 8);
  CHECK(a.generators().size() == 3);
  CHECK(a.generators()[0].name == "m1");
  CHECK(a.generators()[0].perm.image("+1") == "-1");
  CHECK(a.generators()[0].perm.image("+2") == "+2");
  CHECK(is_equivariant(E.complex, a).ok);
  Fixture fx = load_fixture("XP3");
  REQUIRE(fx.action.has_value());
  CHECK(a == *fx.action);

  GroupAction seg = embedded_action(axis_segment());
  CHECK(seg.rank() == 1);  // the x_2 flip fixes everything and contributes nothing
  CHECK(seg.order() == 2);
}

TEST_CASE("folding reflects wholesale when no facet crosses a hyperplane") {
  EmbeddedComplex oct = embedded_fixture("XP3");
  GeometricSimplex positive = gs({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  FoldResult all_neg = fold_facet_full(oct, Simplex::of({"-1", "-2", "-3"}));
  CHECK(all_neg.simplex == positive);
  CHECK(all_neg.splits == 0);
  FoldResult mixed = fold_facet_full(oct, Simplex::of({"-1", "+2", "+3"}));
  CHECK(mixed.simplex == positive);
  CHECK(mixed.splits == 0);
  CHECK(fold_facet_to_orthant(oct, Simplex::of({"+1", "+2", "+3"})) == positive);

  CHECK(kind_of([&] { fold_facet_to_orthant(oct, Simplex::of({"+1", "-1"})); }) ==
        ErrorKind::Precondition);  // not a facet
}

TEST_CASE("folding the diametral axis edge splits it at the origin") {
  EmbeddedComplex E = axis_segment();
  FoldResult fr = fold_facet_full(E, Simplex::of({"a", "b"}));
  CHECK(fr.splits == 1);
  CHECK(fr.simplex == gs({pt({0, 0}), pt({1, 0})}));
  CHECK(gram_det(fr.simplex) * 4 == gram_det(positions_of(E, Simplex::of({"a", "b"}))));
}

TEST_CASE("folding a crossing facet introduces a hyperplane vertex") {
  EmbeddedComplex E = rotated_bipyramid();
  FoldResult fr = fold_facet_full(E, Simplex::of({"p", "q", "t"}));
  CHECK(fr.splits == 1);
  CHECK(fr.simplex == gs({pt({Rational(1, 2), Rational(1, 2), 0}),
                          pt({0, Rational(1, 2), 0}), pt({0, 0, 1})}));
  // the cut point is not a vertex of the input complex
  std::set<RationalPoint> vertex_positions;
  for (const auto& [v, q] : E.position) vertex_positions.insert(q);
  CHECK(vertex_positions.count(pt({0, Rational(1, 2), 0})) == 0);

  // a facet needing a wholesale reflection and then a split
  FoldResult qr = fold_facet_full(E, Simplex::of({"q", "r", "t"}));
  CHECK(qr.splits == 1);
  CHECK(qr.simplex == gs({pt({Rational(1, 2), Rational(1, 2), 0}),
                          pt({Rational(1, 2), 0, 0}), pt({0, 0, 1})}));
}

TEST_CASE("fold is constant on facet orbits") {
  for (const EmbeddedComplex& E : {embedded_fixture("XP3"), refined_octahedron(),
                                   rotated_bipyramid()}) {
    GroupAction a = embedded_action(E);
    for (const auto& orbit : facet_orbits(E.complex, a)) {
      FoldResult rep = fold_facet_full(E, orbit[0]);
      for (const auto& f : orbit) {
        FoldResult fr = fold_facet_full(E, f);
        CHECK(fr.simplex == rep.simplex);
        CHECK(fr.splits == rep.splits);
      }
    }
  }
}

TEST_CASE("cross-polytope quotients are single orthant simplices") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    EmbeddedComplex E = embedded_fixture("XP" + std::to_string(n));
    QuotientResult Q = quotient_triangulation(E, n == 4 ? 2 : 1);
    CHECK(Q.facet_orbit_total == 1);
    CHECK(Q.complex.facets().size() == 1);
    CHECK(Q.complex.dim() == n - 1);
    std::vector<long long> expect;  // a solid (n-1)-simplex: binomial row n
    for (int k = 0; k <= n; ++k) expect.push_back(binomial(n, k));
    CHECK(f_vector(Q.complex).entries == expect);
    // tokens are the printed unit points, with matching position entries
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      RationalPoint e(n, Rational(0));
      e[i] = 1;
      VertexToken tok = format_point(e);
      CHECK(Q.complex.has_vertex(tok));
      REQUIRE(Q.positions.count(tok) == 1);
      CHECK(Q.positions.at(tok) == e);
    }
  }
}

TEST_CASE("refined octahedron quotient is the barycentric orthant triangle") {
  EmbeddedComplex E = refined_octahedron();
  CHECK(verify_2sphere(E.complex));
  CHECK(f_vector(E.complex).entries == std::vector<long long>{1, 14, 36, 24});
  CHECK(facet_orbit_count(E.complex, embedded_action(E)) == 3);

  QuotientResult Q = quotient_triangulation(E);
  CHECK(Q.facet_orbit_total == 3);
  CHECK(Q.complex.facets().size() == 3);
  CHECK(f_vector(Q.complex).entries == std::vector<long long>{1, 4, 6, 3});
  std::vector<VertexToken> verts = Q.complex.vertices();
  CHECK(verts == std::vector<VertexToken>{"0,0,1", "0,1,0", "1,0,0", "1/3,1/3,1/3"});
  // every quotient facet meets the barycenter: the triangle is coned there
  for (const auto& f : Q.complex.facets()) CHECK(f.contains("1/3,1/3,1/3"));
  CHECK(is_single_cycle(link(Q.complex, Simplex::of({"1/3,1/3,1/3"}))));
}

TEST_CASE("rotated bipyramid quotient splits into two lune halves") {
  EmbeddedComplex E = rotated_bipyramid();
  CHECK(verify_2sphere(E.complex));
  QuotientResult Q = quotient_triangulation(E);
  CHECK(Q.facet_orbit_total == 2);
  CHECK(Q.complex.facets().size() == 2);
  CHECK(f_vector(Q.complex).entries == std::vector<long long>{1, 4, 5, 2});
  CHECK(Q.complex.has_vertex("0,1/2,0"));   // split-created hyperplane points
  CHECK(Q.complex.has_vertex("1/2,0,0"));
  CHECK(Q.positions.at("1/2,1/2,0") == pt({Rational(1, 2), Rational(1, 2), 0}));
}

TEST_CASE("quotient is deterministic across job counts") {
  EmbeddedComplex E = refined_octahedron();
  QuotientResult a = quotient_triangulation(E, 1);
  QuotientResult b = quotient_triangulation(E, 4);
  CHECK(a.complex == b.complex);
  CHECK(a.positions == b.positions);
  CHECK(a.facet_orbit_total == b.facet_orbit_total);
  CHECK(serialize_complex(a.complex) == serialize_complex(b.complex));
}

TEST_CASE("quotient preconditions") {
  // partial sign action
  EmbeddedComplex partial = embedded_fixture("XP3");
  partial.reflections = {0, 2};
  CHECK(kind_of([&] { quotient_triangulation(partial); }) == ErrorKind::Precondition);

  // carrier dimension must be ambient minus one
  EmbeddedComplex flat;
  flat.complex = load_fixture("XP2").complex;
  flat.position["+1"] = pt({1, 0, 0});
  flat.position["-1"] = pt({-1, 0, 0});
  flat.position["+2"] = pt({0, 1, 0});
  flat.position["-2"] = pt({0, -1, 0});
  flat.reflections = {0, 1, 2};
  CHECK(kind_of([&] { quotient_triangulation(flat); }) == ErrorKind::Precondition);

  // four points on a line are not a 0-sphere
  EmbeddedComplex four;
  four.complex = complex_from_facets({{"a"}, {"b"}, {"c"}, {"d"}});
  four.position["a"] = pt({1});
  four.position["b"] = pt({-1});
  four.position["c"] = pt({2});
  four.position["d"] = pt({-2});
  four.reflections = {0};
  CHECK(kind_of([&] { quotient_triangulation(four); }) == ErrorKind::Precondition);

  // two nested squares: sign-invariant but not a sphere
  EmbeddedComplex nested;
  nested.complex = complex_from_facets({{"a", "c"}, {"c", "b"}, {"b", "d"}, {"d", "a"},
                                        {"e", "g"}, {"g", "f"}, {"f", "h"}, {"h", "e"}});
  nested.position["a"] = pt({1, 0});
  nested.position["b"] = pt({-1, 0});
  nested.position["c"] = pt({0, 1});
  nested.position["d"] = pt({0, -1});
  nested.position["e"] = pt({2, 0});
  nested.position["f"] = pt({-2, 0});
  nested.position["g"] = pt({0, 2});
  nested.position["h"] = pt({0, -2});
  nested.reflections = {0, 1};
  CHECK(kind_of([&] { quotient_triangulation(nested); }) == ErrorKind::Precondition);

  // dimension cap: the 4-sphere cross-polytope is out of scope
  LabeledComplex xp5 = cross_polytope_sphere(5);
  EmbeddedComplex big;
  big.complex = xp5.complex;
  for (int i = 1; i <= 5; ++i) {
    RationalPoint e(5, Rational(0));
    e[i - 1] = 1;
    big.position["+" + std::to_string(i)] = e;
    RationalPoint me = e;
    me[i - 1] = -1;
    big.position["-" + std::to_string(i)] = me;
  }
  big.reflections = {0, 1, 2, 3, 4};
  CHECK(kind_of([&] { quotient_triangulation(big); }) == ErrorKind::Precondition);
}

TEST_CASE("proper intersection certificates") {
  GeometricSimplex t1 = gs({pt({0, 0}), pt({2, 0}), pt({0, 2})});
  GeometricSimplex t2 = gs({pt({2, 0}), pt({0, 2}), pt({2, 2})});
  CHECK(simplices_intersect_properly(t1, t2));  // shared edge
  GeometricSimplex t3 = gs({pt({2, 0}), pt({4, 0}), pt({2, 2})});
  CHECK(simplices_intersect_properly(t1, t3));  // shared vertex
  GeometricSimplex overlap = gs({pt({1, 0}), pt({3, 0}), pt({1, 2})});
  CHECK_FALSE(simplices_intersect_properly(t1, overlap));  // overlapping area
  GeometricSimplex s1 = gs({pt({0, 0}), pt({2, 0})});
  GeometricSimplex s2 = gs({pt({1, 0}), pt({3, 0})});
  CHECK_FALSE(simplices_intersect_properly(s1, s2));  // partial edge overlap
  CHECK(simplices_intersect_properly(s1, gs({pt({2, 0}), pt({3, 0})})));
  CHECK(simplices_intersect_properly(s1, gs({pt({0, 1}), pt({1, 1})})));  // disjoint
}

TEST_CASE("facet orbit counts for the catalog actions") {
  Fixture k16 = load_fixture("K16");
  Fixture k11 = load_fixture("K11");
  CHECK(facet_orbit_count(k16.complex, *k16.action) == 11);
  CHECK(facet_orbit_count(k11.complex, *k11.action) == 11);
  Fixture xp3 = load_fixture("XP3");
  CHECK(facet_orbit_count(xp3.complex, *xp3.action) == 1);  // free: 8 facets / order 8
  Fixture xp4 = load_fixture("XP4");
  CHECK(facet_orbit_count(xp4.complex, *xp4.action) == 1);

  GroupAction bad = GroupAction::from_generators(
      {{"m1", Permutation::from_cycles({{"5", "7"}})}});
  CHECK(kind_of([&] { facet_orbit_count(k16.complex, bad); }) == ErrorKind::Precondition);
}

}  // TEST_SUITE
