#include "dwf/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "dwf/rational.hpp"

namespace dwf {

std::string to_frac_string(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_frac(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

Rational rationalize(double x, const Int& max_den) {
  if (max_den < 1) throw std::invalid_argument("rationalize: max_den must be >= 1");
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  Rational exact(x);  // exact binary expansion
  if (denominator(exact) <= max_den) return exact;

  // Continued-fraction walk with convergents p/q; stop when q exceeds max_den
  // and take the best semiconvergent.
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rem = exact;
  bool neg = rem < 0;
  if (neg) rem = -rem;
  while (true) {
    Int a = numerator(rem) / denominator(rem);
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Largest k with q0 + k q1 <= max_den gives the best semiconvergent.
      Int k = q1 == 0 ? Int(0) : (max_den - q0) / q1;
      Int ps = p0 + k * p1, qs = q0 + k * q1;
      Rational cand1(ps, qs), cand2(p1, q1 == 0 ? Int(1) : q1);
      Rational pos = neg ? -exact : exact;
      Rational best = (q1 != 0 && abs(cand2 - pos) <= abs(cand1 - pos)) ? cand2 : cand1;
      return neg ? -best : best;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rational frac = rem - a;
    if (frac == 0) return neg ? Rational(-p1, q1) : Rational(p1, q1);
    rem = 1 / frac;
  }
}

Rational rdot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int idot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational irdot(const IntVec& a, const RatVec& x) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += Rational(a[i]) * x[i];
  }
  return s;
}

void normalize_content(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
}

std::pair<IntVec, Int> scale_to_integer(const RatVec& a, const Rational& b) {
  Int l = denominator(b);
  for (const Rational& q : a) l = boost::multiprecision::lcm(l, denominator(q));
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = numerator(a[i]) * (l / denominator(a[i]));
  Int bi = numerator(b) * (l / denominator(b));
  // reduce by joint content
  Int g = abs(bi);
  for (const Int& x : out) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Int& x : out) x /= g;
    bi /= g;
  }
  return {std::move(out), std::move(bi)};
}

std::pair<IntVec, Rational> scale_direction(const RatVec& u) {
  Int l = 1;
  for (const Rational& q : u) l = boost::multiprecision::lcm(l, denominator(q));
  IntVec out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = numerator(u[i]) * (l / denominator(u[i]));
  Int g = 0;
  for (const Int& x : out) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : out) x /= g;
  if (g == 0) g = 1;
  return {std::move(out), Rational(l, g)};
}

bool RankTracker::add(RatVec row) {
  for (size_t r = 0; r < elim_.size(); ++r) {
    const Rational& lead = row[pivots_[r]];
    if (lead != 0) {
      Rational c = lead / elim_[r][pivots_[r]];
      for (int j = 0; j < cols_; ++j) row[j] -= c * elim_[r][j];
    }
  }
  for (int j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      pivots_.push_back(j);
      elim_.push_back(std::move(row));
      return true;
    }
  }
  return false;
}

bool RankTracker::add(const IntVec& row) {
  RatVec r(row.size());
  for (size_t i = 0; i < row.size(); ++i) r[i] = row[i];
  return add(std::move(r));
}

int rank(RatMatrix m) {
  if (m.empty()) return 0;
  RankTracker t(static_cast<int>(m[0].size()));
  for (auto& row : m) t.add(std::move(row));
  return t.rank();
}

std::optional<RatVec> solve_square(RatMatrix m, RatVec rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rational inv = 1 / m[col][col];
    for (int j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational c = m[r][col];
      for (int j = col; j < n; ++j) m[r][j] -= c * m[col][j];
      rhs[r] -= c * rhs[col];
    }
  }
  return rhs;
}

std::optional<RatMatrix> invert(RatMatrix m) {
  const int n = static_cast<int>(m.size());
  RatMatrix aug(n, RatVec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (aug[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) return std::nullopt;
    std::swap(aug[col], aug[piv]);
    Rational inv = 1 / aug[col][col];
    for (int j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational c = aug[r][col];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] -= c * aug[col][j];
    }
  }
  RatMatrix out(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

RatMatrix nullspace(const RatMatrix& m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  RatMatrix elim;
  std::vector<int> pivots;
  for (RatVec row : m) {
    for (size_t r = 0; r < elim.size(); ++r) {
      const Rational& lead = row[pivots[r]];
      if (lead != 0) {
        Rational c = lead / elim[r][pivots[r]];
        for (int j = 0; j < cols; ++j) row[j] -= c * elim[r][j];
      }
    }
    for (int j = 0; j < cols; ++j) {
      if (row[j] != 0) {
        pivots.push_back(j);
        elim.push_back(row);
        break;
      }
    }
  }
  // back-substitute to reduced echelon form
  for (int r = static_cast<int>(elim.size()) - 1; r >= 0; --r) {
    Rational inv = 1 / elim[r][pivots[r]];
    for (int j = 0; j < cols; ++j) elim[r][j] *= inv;
    for (int r2 = 0; r2 < r; ++r2) {
      Rational c = elim[r2][pivots[r]];
      if (c == 0) continue;
      for (int j = 0; j < cols; ++j) elim[r2][j] -= c * elim[r][j];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < elim.size(); ++r) v[pivots[r]] = -elim[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dwf
