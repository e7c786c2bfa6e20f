#include "dwf/phasespace.hpp"

#include <set>
#include <stdexcept>

namespace dwf {

StriationSet StriationSet::build(const Field& field) {
  StriationSet set(field);
  const int d = field.order();
  const auto elems = field.elements();

  // vertical striation: line j = {(c_j, p) : p in GF(d)}
  Striation vertical;
  vertical.index = 0;
  for (int j = 0; j < d; ++j) {
    Line line{0, j, {}};
    for (int pi = 0; pi < d; ++pi) line.points.push_back({elems[j], elems[pi]});
    vertical.lines.push_back(std::move(line));
  }
  set.striations_.push_back(std::move(vertical));

  // slope striations: line j of slope s is {(q, s*q + c_j) : q in GF(d)}
  for (int si = 0; si < d; ++si) {
    Striation st;
    st.index = si + 1;
    const GfElement& slope = elems[si];
    for (int j = 0; j < d; ++j) {
      Line line{si + 1, j, {}};
      for (int qi = 0; qi < d; ++qi) {
        GfElement p = field.add(field.mul(slope, elems[qi]), elems[j]);
        line.points.push_back({elems[qi], p});
      }
      st.lines.push_back(std::move(line));
    }
    set.striations_.push_back(std::move(st));
  }
  return set;
}

int StriationSet::point_index(const PhasePoint& alpha) const {
  return field_.index(alpha.q) * d() + field_.index(alpha.p);
}

PhasePoint StriationSet::point_at(int q_index, int p_index) const {
  return {field_.element(q_index), field_.element(p_index)};
}

std::vector<LineId> StriationSet::lines_through(const PhasePoint& alpha) const {
  const int qi = field_.index(alpha.q);  // also validates membership
  std::vector<LineId> out;
  out.reserve(d() + 1);
  out.push_back({0, qi});
  const auto elems = field_.elements();
  for (int si = 0; si < d(); ++si) {
    // intercept c = p - s*q
    GfElement c = field_.sub(alpha.p, field_.mul(elems[si], alpha.q));
    out.push_back({si + 1, field_.index(c)});
  }
  return out;
}

PropertyReport StriationSet::verify_properties() const {
  return verify_striation_properties(field_, striations_);
}

namespace {

std::string point_str(const Field& f, const PhasePoint& a) {
  return "(" + std::to_string(f.index(a.q)) + "," + std::to_string(f.index(a.p)) + ")";
}

}  // namespace

PropertyReport verify_striation_properties(const Field& field,
                                           const std::vector<Striation>& striations) {
  PropertyReport rep;
  rep.pair_unique_line = rep.parallel_exists_unique = rep.nonparallel_single_intersection = true;
  const int d = field.order();

  std::vector<PhasePoint> points;
  for (int qi = 0; qi < d; ++qi)
    for (int pi = 0; pi < d; ++pi) points.push_back({field.element(qi), field.element(pi)});

  auto contains = [](const Line& l, const PhasePoint& a) {
    for (const auto& pt : l.points)
      if (pt == a) return true;
    return false;
  };

  // i: every unordered pair on exactly one line
  for (size_t u = 0; u < points.size() && rep.pair_unique_line; ++u) {
    for (size_t v = u + 1; v < points.size(); ++v) {
      int count = 0;
      for (const auto& st : striations)
        for (const auto& l : st.lines)
          if (contains(l, points[u]) && contains(l, points[v])) ++count;
      if (count != 1) {
        rep.pair_unique_line = false;
        rep.counterexample = "pair " + point_str(field, points[u]) + "," +
                             point_str(field, points[v]) + " on " + std::to_string(count) +
                             " lines";
        break;
      }
    }
  }

  // ii: point alpha not on line lambda -> exactly one line parallel to lambda
  // (same striation) through alpha
  for (const auto& st : striations) {
    if (!rep.parallel_exists_unique) break;
    for (const auto& l : st.lines) {
      for (const auto& a : points) {
        if (contains(l, a)) continue;
        int count = 0;
        for (const auto& par : st.lines)
          if (&par != &l && contains(par, a)) ++count;
        if (count != 1) {
          rep.parallel_exists_unique = false;
          if (rep.counterexample.empty())
            rep.counterexample = "point " + point_str(field, a) + " off line (" +
                                 std::to_string(l.striation_index) + "," +
                                 std::to_string(l.line_index) + ") has " + std::to_string(count) +
                                 " parallels";
          break;
        }
      }
      if (!rep.parallel_exists_unique) break;
    }
  }

  // iii: lines from different striations intersect in exactly one point
  for (size_t s1 = 0; s1 < striations.size() && rep.nonparallel_single_intersection; ++s1) {
    for (size_t s2 = s1 + 1; s2 < striations.size(); ++s2) {
      for (const auto& l1 : striations[s1].lines) {
        for (const auto& l2 : striations[s2].lines) {
          int count = 0;
          for (const auto& a : l1.points)
            if (contains(l2, a)) ++count;
          if (count != 1) {
            rep.nonparallel_single_intersection = false;
            if (rep.counterexample.empty())
              rep.counterexample = "lines (" + std::to_string(l1.striation_index) + "," +
                                   std::to_string(l1.line_index) + ") and (" +
                                   std::to_string(l2.striation_index) + "," +
                                   std::to_string(l2.line_index) + ") meet in " +
                                   std::to_string(count) + " points";
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace dwf
