#include "doctest.h"
#include "dwf/polytope.hpp"

#include <cstdio>

#include "oracle.hpp"

using namespace dwf;

namespace {

HPolytope unit_square() {
  HPolytope h;
  h.dim = 2;
  h.inequalities.push_back({{Rational(1), Rational(0)}, Rational(0)});
  h.inequalities.push_back({{Rational(-1), Rational(0)}, Rational(-1)});
  h.inequalities.push_back({{Rational(0), Rational(1)}, Rational(0)});
  h.inequalities.push_back({{Rational(0), Rational(-1)}, Rational(-1)});
  return h;
}

void add_row(HPolytope& h, int a, int b, int c, int rhs) {
  h.inequalities.push_back({{Rational(a), Rational(b), Rational(c)}, Rational(rhs)});
}

HPolytope t1_system() {
  HPolytope h;
  h.dim = 3;
  add_row(h, 1, 1, 1, 1);
  add_row(h, 1, -1, -1, -1);
  add_row(h, -1, 1, -1, -1);
  add_row(h, -1, -1, 1, -1);
  return h;
}

// all eight qubit non-negativity inequalities (T1 and T2 together)
HPolytope octahedron_system() {
  HPolytope h = t1_system();
  add_row(h, -1, -1, -1, -2);
  add_row(h, -1, 1, 1, 0);
  add_row(h, 1, -1, 1, 0);
  add_row(h, 1, 1, -1, 0);
  return h;
}

RatVec pt(std::initializer_list<Rational> v) { return RatVec(v); }

}  // namespace

TEST_CASE("unit square has four vertices") {
  auto res = vertex_enumeration(unit_square());
  REQUIRE(res.feasible);
  RatMatrix expect = {pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})};
  CHECK(res.poly.vertices == expect);
}

TEST_CASE("T1 system yields the tetrahedron corners") {
  auto res = vertex_enumeration(t1_system());
  RatMatrix expect = {pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 0, 0}), pt({1, 1, 1})};
  CHECK(res.poly.vertices == expect);
}

TEST_CASE("eight qubit inequalities cut the octahedron") {
  auto res = vertex_enumeration(octahedron_system());
  const Rational half(1, 2);
  RatMatrix expect = {pt({0, half, half}), pt({half, 0, half}), pt({half, half, 0}),
                      pt({half, half, 1}), pt({half, 1, half}), pt({1, half, half})};
  CHECK(res.poly.vertices == expect);

  // each octahedron vertex satisfies every inequality, tight rank = dim
  for (const auto& v : res.poly.vertices) {
    RatMatrix tight;
    for (const auto& iq : octahedron_system().inequalities) {
      Rational val = rdot(iq.a, v);
      CHECK(val >= iq.b);
      if (val == iq.b) tight.push_back(iq.a);
    }
    CHECK(rank(tight) == 3);
  }
}

TEST_CASE("infeasible and unbounded inputs") {
  HPolytope empty;
  empty.dim = 2;
  empty.inequalities.push_back({{Rational(1), Rational(0)}, Rational(1)});
  empty.inequalities.push_back({{Rational(-1), Rational(0)}, Rational(0)});
  auto res = vertex_enumeration(empty);
  CHECK_FALSE(res.feasible);
  CHECK(res.poly.vertices.empty());

  HPolytope half;
  half.dim = 2;
  half.inequalities.push_back({{Rational(1), Rational(0)}, Rational(0)});
  CHECK_THROWS_AS(vertex_enumeration(half), std::domain_error);
}

TEST_CASE("equalities reduce the active dimension") {
  HPolytope h = unit_square();
  h.equalities.push_back({{Rational(1), Rational(-1)}, Rational(0)});  // x = y
  auto res = vertex_enumeration(h);
  RatMatrix expect = {pt({0, 0}), pt({1, 1})};
  CHECK(res.poly.vertices == expect);
}

TEST_CASE("facet enumeration of reference solids") {
  // octahedron: 6 vertices -> 8 facets
  const Rational half(1, 2);
  VPolytope octa = VPolytope::from_points(
      3, {pt({0, half, half}), pt({half, 0, half}), pt({half, half, 0}), pt({half, half, 1}),
          pt({half, 1, half}), pt({1, half, half})});
  HPolytope facets = facet_enumeration(octa);
  CHECK(facets.inequalities.size() == 8);
  for (const auto& iq : facets.inequalities)
    for (const auto& v : octa.vertices) CHECK(rdot(iq.a, v) >= iq.b);

  // 3-simplex: 4 facets
  VPolytope simplex = VPolytope::from_points(
      3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  CHECK(facet_enumeration(simplex).inequalities.size() == 4);

  // planar square: 4 facets
  VPolytope square = VPolytope::from_points(2, {pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
  CHECK(facet_enumeration(square).inequalities.size() == 4);

  // collinear points in the plane: degenerate hull
  VPolytope seg = VPolytope::from_points(2, {pt({0, 0}), pt({1, 1}), pt({2, 2})});
  CHECK_THROWS_WITH_AS(facet_enumeration(seg),
                       doctest::Contains("affine dimension 1"), std::domain_error);
}

TEST_CASE("facet/vertex round trip agrees with redundancy removal") {
  for (const HPolytope& h : {unit_square(), t1_system(), octahedron_system()}) {
    auto verts = vertex_enumeration(h);
    HPolytope facets = facet_enumeration(verts.poly);
    HPolytope reduced = remove_redundant(h).reduced;
    // mutual containment by LP: every facet row is implied by reduced, and
    // vice versa
    for (const auto& iq : facets.inequalities) {
      LpResult r = lp_solve(iq.a, reduced, LpSense::minimize);
      REQUIRE(r.status == LpStatus::optimal);
      CHECK(r.value >= iq.b);
    }
    for (const auto& iq : reduced.inequalities) {
      LpResult r = lp_solve(iq.a, facets, LpSense::minimize);
      REQUIRE(r.status == LpStatus::optimal);
      CHECK(r.value >= iq.b);
    }
  }
}

TEST_CASE("is_bounded") {
  CHECK(is_bounded(unit_square()));
  HPolytope half;
  half.dim = 2;
  half.inequalities.push_back({{Rational(0), Rational(1)}, Rational(0)});
  CHECK_FALSE(is_bounded(half));
  CHECK(is_bounded(octahedron_system()));
  HPolytope empty;
  empty.dim = 1;
  empty.inequalities.push_back({{Rational(1)}, Rational(1)});
  empty.inequalities.push_back({{Rational(-1)}, Rational(0)});
  CHECK(is_bounded(empty));
}

TEST_CASE("hull membership certificates") {
  const Rational half(1, 2);
  VPolytope octa = VPolytope::from_points(
      3, {pt({0, half, half}), pt({half, 0, half}), pt({half, half, 0}), pt({half, half, 1}),
          pt({half, 1, half}), pt({1, half, half})});

  // center: valid weights summing to one
  auto center = hull_membership(octa, pt({half, half, half}));
  REQUIRE(center.inside);
  Rational sum = 0;
  RatVec recon(3, 0);
  for (const auto& [k, w] : center.combination.weights) {
    CHECK(w > 0);
    sum += w;
    for (int j = 0; j < 3; ++j) recon[j] += w * octa.vertices[k][j];
  }
  CHECK(sum == 1);
  CHECK(recon == pt({half, half, half}));

  // a vertex is its own certificate
  auto at_vertex = hull_membership(octa, octa.vertices[0]);
  REQUIRE(at_vertex.inside);
  REQUIRE(at_vertex.combination.weights.size() == 1);
  CHECK(at_vertex.combination.weights[0].second == 1);
  CHECK(octa.vertices[at_vertex.combination.weights[0].first] == octa.vertices[0]);

  // an outside point earns an exact separating hyperplane
  auto out = hull_membership(octa, pt({1, 1, 1}));
  REQUIRE_FALSE(out.inside);
  for (const auto& v : octa.vertices) CHECK(rdot(out.separator.a, v) >= out.separator.b);
  CHECK(rdot(out.separator.a, pt({1, 1, 1})) < out.separator.b);
}

TEST_CASE("redundancy removal") {
  HPolytope sq = unit_square();
  sq.inequalities.push_back({{Rational(1), Rational(0)}, Rational(0)});   // duplicate side
  sq.inequalities.push_back({{Rational(1), Rational(0)}, Rational(-1)});  // slack x >= -1
  auto rep = remove_redundant(sq);
  CHECK(rep.removed == 2);
  CHECK(rep.reduced.inequalities.size() == 4);

  auto octa = remove_redundant(octahedron_system());
  CHECK(octa.removed == 0);
  CHECK(octa.reduced.inequalities.size() == 8);
}

TEST_CASE("vertex set comparison") {
  VPolytope a = VPolytope::from_points(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
  VPolytope b = VPolytope::from_points(2, {pt({0, 1}), pt({0, 0}), pt({1, 0})});
  CHECK(polytope_equal(a, b).equal);

  VPolytope c = VPolytope::from_points(2, {pt({0, 0}), pt({1, 0}),
                                           pt({Rational(1, 1000000), 1})});
  auto diff = polytope_equal(c, a);
  CHECK_FALSE(diff.equal);
  CHECK(diff.missing.size() == 1);
  CHECK(diff.extra.size() == 1);
  CHECK(diff.missing[0] == pt({0, 1}));
}

TEST_CASE("enumeration matches the brute-force oracle on random systems") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 120 && seed < 2000; ++seed) {
    HPolytope h = testing::random_system(seed);
    LpResult feas = lp_solve(RatVec(h.dim, 0), h, LpSense::maximize);
    if (feas.status == LpStatus::infeasible) continue;
    if (!is_bounded(h)) continue;
    ++tested;
    CAPTURE(seed);
    RatMatrix expect = testing::oracle_vertices(h);
    auto res = vertex_enumeration(h);
    CHECK(res.poly.vertices == expect);
    VertexEnumOptions polar;
    polar.backend = VertexEnumOptions::Backend::polar;
    auto res2 = vertex_enumeration(h, polar);
    CHECK(res2.poly.vertices == expect);
  }
  CHECK(tested >= 60);
}

TEST_CASE("dd and polar backends agree on the octahedron") {
  VertexEnumOptions polar;
  polar.backend = VertexEnumOptions::Backend::polar;
  CHECK(vertex_enumeration(octahedron_system(), polar).poly.vertices ==
        vertex_enumeration(octahedron_system()).poly.vertices);
}

TEST_CASE("checkpointing resumes an aborted enumeration") {
  const std::string path = "dd_resume_test_checkpoint.json";
  std::remove(path.c_str());
  HPolytope h = octahedron_system();

  VertexEnumOptions opts;
  opts.checkpoint_path = path;
  opts.checkpoint_every = 1;
  int seen = 0;
  opts.progress = [&](std::size_t, std::size_t, std::size_t) {
    if (++seen == 3) throw std::runtime_error("simulated interruption");
  };
  CHECK_THROWS_AS(vertex_enumeration(h, opts), std::runtime_error);

  // second run resumes from the checkpoint file and completes
  VertexEnumOptions resume;
  resume.checkpoint_path = path;
  resume.checkpoint_every = 4;
  std::size_t first_processed = 0;
  resume.progress = [&](std::size_t done, std::size_t, std::size_t) {
    if (first_processed == 0) first_processed = done;
  };
  auto res = vertex_enumeration(h, resume);
  CHECK(first_processed > 4);  // did not start from scratch
  CHECK(res.poly.vertices == vertex_enumeration(h).poly.vertices);
  std::remove(path.c_str());
}

TEST_CASE("the intermediate ray cap aborts with a length_error") {
  VertexEnumOptions opts;
  opts.max_rays = 2;
  CHECK_THROWS_AS(vertex_enumeration(octahedron_system(), opts), std::length_error);
}
