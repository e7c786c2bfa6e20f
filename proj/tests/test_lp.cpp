#include "doctest.h"
#include "dwf/polytope.hpp"

#include "oracle.hpp"

using namespace dwf;

namespace {

HPolytope interval01() {
  HPolytope h;
  h.dim = 1;
  h.inequalities.push_back({{Rational(1)}, Rational(0)});    // x >= 0
  h.inequalities.push_back({{Rational(-1)}, Rational(-1)});  // x <= 1
  return h;
}

HPolytope t1_tetrahedron() {
  HPolytope h;
  h.dim = 3;
  auto row = [&](int a, int b, int c, int rhs) {
    h.inequalities.push_back({{Rational(a), Rational(b), Rational(c)}, Rational(rhs)});
  };
  row(1, 1, 1, 1);
  row(1, -1, -1, -1);
  row(-1, 1, -1, -1);
  row(-1, -1, 1, -1);
  return h;
}

}  // namespace

TEST_CASE("one-dimensional basics") {
  LpResult r = lp_solve({Rational(1)}, interval01(), LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
  CHECK(r.point[0] == 1);

  r = lp_solve({Rational(1)}, interval01(), LpSense::minimize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 0);

  HPolytope half;
  half.dim = 1;
  half.inequalities.push_back({{Rational(1)}, Rational(0)});
  CHECK(lp_solve({Rational(1)}, half, LpSense::maximize).status == LpStatus::unbounded);
  CHECK(lp_solve({Rational(1)}, half, LpSense::minimize).status == LpStatus::optimal);

  HPolytope empty;
  empty.dim = 1;
  empty.inequalities.push_back({{Rational(1)}, Rational(1)});    // x >= 1
  empty.inequalities.push_back({{Rational(-1)}, Rational(0)});   // x <= 0
  CHECK(lp_solve({Rational(1)}, empty, LpSense::maximize).status == LpStatus::infeasible);
}

TEST_CASE("tetrahedron objective attains the corner") {
  LpResult r = lp_solve({Rational(1), Rational(1), Rational(1)}, t1_tetrahedron(),
                        LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 3);
  CHECK(r.point == RatVec{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("equalities and fractional data") {
  HPolytope h;
  h.dim = 2;
  h.inequalities.push_back({{Rational(1), Rational(0)}, Rational(0)});
  h.inequalities.push_back({{Rational(0), Rational(1)}, Rational(0)});
  h.equalities.push_back({{Rational(1), Rational(1)}, Rational(1)});
  LpResult r = lp_solve({Rational(1), Rational(3, 2)}, h, LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(3, 2));
  CHECK(r.point == RatVec{Rational(0), Rational(1)});

  r = lp_solve({Rational(1), Rational(3, 2)}, h, LpSense::minimize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
}

TEST_CASE("rank-deficient systems") {
  // constraints touch only x; y is free
  HPolytope h;
  h.dim = 2;
  h.inequalities.push_back({{Rational(1), Rational(0)}, Rational(0)});
  h.inequalities.push_back({{Rational(-1), Rational(0)}, Rational(-2)});
  CHECK(lp_solve({Rational(0), Rational(1)}, h, LpSense::maximize).status == LpStatus::unbounded);
  LpResult r = lp_solve({Rational(1), Rational(0)}, h, LpSense::maximize);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
}

TEST_CASE("optimal points satisfy all constraints exactly") {
  int solved = 0;
  for (std::uint64_t seed = 0; solved < 60 && seed < 400; ++seed) {
    HPolytope h = testing::random_system(seed);
    std::mt19937_64 gen(seed ^ 0xabcdef);
    std::uniform_int_distribution<int> coef(-3, 3);
    RatVec c(h.dim);
    for (auto& v : c) v = coef(gen);
    LpResult r = lp_solve(c, h, LpSense::maximize);
    if (r.status != LpStatus::optimal) continue;
    ++solved;
    CHECK(rdot(c, r.point) == r.value);
    for (const auto& iq : h.inequalities) CHECK(rdot(iq.a, r.point) >= iq.b);
  }
  CHECK(solved >= 30);
}

TEST_CASE("optimal values match the brute-force vertex maxima") {
  int compared = 0;
  for (std::uint64_t seed = 1000; compared < 40 && seed < 1400; ++seed) {
    HPolytope h = testing::random_system(seed);
    if (!is_bounded(h)) continue;
    RatMatrix verts = testing::oracle_vertices(h);
    if (verts.empty()) continue;
    std::mt19937_64 gen(seed ^ 0x5eed);
    std::uniform_int_distribution<int> coef(-3, 3);
    RatVec c(h.dim);
    for (auto& v : c) v = coef(gen);
    LpResult r = lp_solve(c, h, LpSense::maximize);
    REQUIRE(r.status == LpStatus::optimal);
    Rational best = rdot(c, verts[0]);
    for (const auto& v : verts) best = std::max(best, rdot(c, v));
    CHECK(r.value == best);
    ++compared;
  }
  CHECK(compared >= 20);
}
