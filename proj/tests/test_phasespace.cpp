#include "doctest.h"
#include "dwf/phasespace.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace dwf;

namespace {

std::set<std::pair<int, int>> point_set(const Field& f, const Line& l) {
  std::set<std::pair<int, int>> s;
  for (const auto& pt : l.points) s.insert({f.index(pt.q), f.index(pt.p)});
  return s;
}

}  // namespace

TEST_CASE("qubit striations match the three 2x2 patterns") {
  Field f = Field::of_order(2);
  auto set = StriationSet::build(f);
  REQUIRE(set.striations().size() == 3);
  // striation 0: columns (vertical), 1: rows (slope 0), 2: diagonals (slope 1)
  CHECK(point_set(f, set.line(0, 0)) == std::set<std::pair<int, int>>{{0, 0}, {0, 1}});
  CHECK(point_set(f, set.line(0, 1)) == std::set<std::pair<int, int>>{{1, 0}, {1, 1}});
  CHECK(point_set(f, set.line(1, 0)) == std::set<std::pair<int, int>>{{0, 0}, {1, 0}});
  CHECK(point_set(f, set.line(1, 1)) == std::set<std::pair<int, int>>{{0, 1}, {1, 1}});
  CHECK(point_set(f, set.line(2, 0)) == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(point_set(f, set.line(2, 1)) == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(set.verify_properties().all());
}

TEST_CASE("counts are d+1 striations of d lines") {
  auto s3 = StriationSet::build(Field::of_order(3));
  CHECK(s3.striations().size() == 4);
  int lines = 0;
  for (const auto& st : s3.striations()) lines += static_cast<int>(st.lines.size());
  CHECK(lines == 12);

  for (int d : {2, 3, 4, 5, 7, 8, 9}) {
    auto s = StriationSet::build(Field::of_order(d));
    CHECK(static_cast<int>(s.striations().size()) == d + 1);
    int total = 0;
    for (const auto& st : s.striations()) {
      CHECK(static_cast<int>(st.lines.size()) == d);
      for (const auto& l : st.lines) CHECK(static_cast<int>(l.points.size()) == d);
      total += static_cast<int>(st.lines.size());
    }
    CHECK(total == d * (d + 1));
  }
}

TEST_CASE("properties i-iii hold exhaustively for every supported order") {
  for (int d : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(d);
    auto s = StriationSet::build(Field::of_order(d));
    auto rep = s.verify_properties();
    CHECK(rep.pair_unique_line);
    CHECK(rep.parallel_exists_unique);
    CHECK(rep.nonparallel_single_intersection);
    CHECK(rep.counterexample.empty());
  }
}

TEST_CASE("a swapped point breaks property i with a witness") {
  Field f = Field::of_order(3);
  auto good = StriationSet::build(f);
  auto striations = good.striations();
  // move one point of striation 1 line 0 into line 1 and vice versa
  std::swap(striations[1].lines[0].points[0], striations[1].lines[1].points[0]);
  auto rep = verify_striation_properties(f, striations);
  CHECK_FALSE(rep.pair_unique_line);
  CHECK_FALSE(rep.counterexample.empty());
}

TEST_CASE("lines_through yields one line per striation") {
  Field f2 = Field::of_order(2);
  auto s2 = StriationSet::build(f2);
  PhasePoint origin{f2.element(0), f2.element(0)};
  auto ids = s2.lines_through(origin);
  REQUIRE(ids.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(ids[i].striation == i);
    bool found = false;
    for (const auto& pt : s2.line(ids[i].striation, ids[i].line).points)
      if (pt == origin) found = true;
    CHECK(found);
  }

  // d = 3, origin: intercept 0 lines everywhere
  Field f3 = Field::of_order(3);
  auto s3 = StriationSet::build(f3);
  auto ids3 = s3.lines_through({f3.element(0), f3.element(0)});
  REQUIRE(ids3.size() == 4);
  for (const auto& id : ids3) CHECK(id.line == 0);

  for (int d : {2, 3, 4, 5}) {
    auto s = StriationSet::build(Field::of_order(d));
    auto ids_any = s.lines_through(s.point_at(d - 1, d / 2));
    CHECK(static_cast<int>(ids_any.size()) == d + 1);
  }
}

TEST_CASE("lines_through over all points covers each line d times") {
  for (int d : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(d);
    auto s = StriationSet::build(Field::of_order(d));
    std::map<std::pair<int, int>, int> cover;
    for (int qi = 0; qi < d; ++qi)
      for (int pi = 0; pi < d; ++pi)
        for (const auto& id : s.lines_through(s.point_at(qi, pi))) cover[{id.striation, id.line}]++;
    CHECK(static_cast<int>(cover.size()) == d * (d + 1));
    for (const auto& [id, count] : cover) CHECK(count == d);
  }
}

TEST_CASE("every pair of lines from different striations meets exactly once") {
  for (int d : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(d);
    Field f = Field::of_order(d);
    auto s = StriationSet::build(f);
    for (size_t s1 = 0; s1 < s.striations().size(); ++s1) {
      for (size_t s2 = s1 + 1; s2 < s.striations().size(); ++s2) {
        for (const auto& l1 : s.striations()[s1].lines) {
          for (const auto& l2 : s.striations()[s2].lines) {
            auto a = point_set(f, l1), b = point_set(f, l2);
            int common = 0;
            for (const auto& pt : a)
              if (b.count(pt)) ++common;
            CHECK(common == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("foreign points are rejected") {
  auto s2 = StriationSet::build(Field::of_order(2));
  Field f3 = Field::of_order(3);
  CHECK_THROWS_AS((void)s2.lines_through({f3.element(2), f3.element(0)}), std::invalid_argument);
}
