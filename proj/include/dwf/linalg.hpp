// Small exact linear-algebra helpers over Rational / Int used by the LP solver
// and the double-description engine. Dense, dimension <= ~25 throughout.

#pragma once

#include <optional>
#include <span>

#include "dwf/rational.hpp"

namespace dwf {

Rational rdot(const RatVec& a, const RatVec& b);
Int idot(const IntVec& a, const IntVec& b);
// Mixed dot: integer row against a rational point.
Rational irdot(const IntVec& a, const RatVec& x);

// Divides by the (positive) content gcd; the zero vector is left unchanged.
void normalize_content(IntVec& v);

// Clears denominators of (a, b) jointly: returns integer (a', b') with the
// same ratio set, content 1.
std::pair<IntVec, Int> scale_to_integer(const RatVec& a, const Rational& b);

// Integer vector u_int = mu * u with the positive multiplier mu returned;
// u_int has content 1 (zero vector: mu = 1).
std::pair<IntVec, Rational> scale_direction(const RatVec& u);

// Rank by fraction-elimination; input copied.
int rank(RatMatrix m);

// Incremental rank tracker: feed rows one at a time, rank() grows monotonically.
class RankTracker {
 public:
  explicit RankTracker(int cols) : cols_(cols) {}
  // Returns true if the row increased the rank.
  bool add(RatVec row);
  bool add(const IntVec& row);
  int rank() const { return static_cast<int>(elim_.size()); }
  // Echelon rows spanning the tracked row space.
  const RatMatrix& basis_rows() const { return elim_; }

 private:
  int cols_;
  RatMatrix elim_;  // rows kept in echelon form
  std::vector<int> pivots_;
};

// Solves M x = rhs for square M. Empty optional when M is singular.
std::optional<RatVec> solve_square(RatMatrix m, RatVec rhs);

// Inverse of a square rational matrix; empty when singular.
std::optional<RatMatrix> invert(RatMatrix m);

// Basis of the right nullspace {x : M x = 0}, one vector per row of the result.
RatMatrix nullspace(const RatMatrix& m);

}  // namespace dwf
