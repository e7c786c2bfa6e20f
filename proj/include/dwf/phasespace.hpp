// The d x d discrete phase space over GF(d), its lines, and the d+1
// striations into parallel lines.
//
// Indexing convention (fixed so every output is reproducible byte-for-byte):
// striation 0 is vertical (lines of constant q); striations 1..d have slope
// s = field element of canonical index 0..d-1 and consist of the lines
// {(q, s*q + c)}; within a striation, line j is the one with intercept of
// canonical index j. All indices are 0-based here; labels are 1-based only
// in serialized output.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwf/gf.hpp"

namespace dwf {

struct PhasePoint {
  GfElement q;  // horizontal coordinate
  GfElement p;  // vertical coordinate

  bool operator==(const PhasePoint&) const = default;
};

struct Line {
  int striation_index = 0;  // 0..d
  int line_index = 0;       // 0..d-1
  std::vector<PhasePoint> points;  // exactly d, ordered by q (by p for the vertical striation)
};

struct Striation {
  int index = 0;
  std::vector<Line> lines;  // exactly d, pairwise disjoint, covering all d^2 points
};

struct LineId {
  int striation = 0;
  int line = 0;

  bool operator==(const LineId&) const = default;
};

struct PropertyReport {
  // i: every unordered point pair lies on exactly one line.
  bool pair_unique_line = false;
  // ii: for a point off a line, exactly one parallel line through the point.
  bool parallel_exists_unique = false;
  // iii: non-parallel lines meet in exactly one point.
  bool nonparallel_single_intersection = false;
  std::string counterexample;  // empty when all three hold

  bool all() const { return pair_unique_line && parallel_exists_unique && nonparallel_single_intersection; }
};

class StriationSet {
 public:
  // Builds the d+1 striations from the field lines of GF(d).
  static StriationSet build(const Field& field);

  const Field& field() const { return field_; }
  int d() const { return field_.order(); }
  const std::vector<Striation>& striations() const { return striations_; }
  const Line& line(int striation, int line) const { return striations_.at(striation).lines.at(line); }

  // The unique line of each striation through alpha, ordered by striation.
  std::vector<LineId> lines_through(const PhasePoint& alpha) const;

  // point index q*d + p, used to address Wigner tables
  int point_index(const PhasePoint& alpha) const;
  PhasePoint point_at(int q_index, int p_index) const;

  PropertyReport verify_properties() const;

 private:
  explicit StriationSet(Field field) : field_(std::move(field)) {}

  Field field_;
  std::vector<Striation> striations_;
};

// Exhaustive check of properties i-iii for an arbitrary striation list over
// the given field (used to validate mutated sets in tests as well).
PropertyReport verify_striation_properties(const Field& field, const std::vector<Striation>& striations);

}  // namespace dwf
