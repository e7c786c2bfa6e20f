// Test-only brute-force oracles, independent of the enumeration engine:
// candidate vertices from every dim-sized subset of inequality rows, kept
// when the subsystem is uniquely solvable and the solution is feasible.

#pragma once

#include <algorithm>
#include <random>

#include "dwf/linalg.hpp"
#include "dwf/polytope.hpp"

namespace dwf::testing {

inline RatMatrix oracle_vertices(const HPolytope& h) {
  const int n = h.dim;
  const int m = static_cast<int>(h.inequalities.size());
  RatMatrix found;
  std::vector<int> pick(n);
  auto feasible = [&](const RatVec& x) {
    for (const auto& iq : h.inequalities)
      if (rdot(iq.a, x) < iq.b) return false;
    return true;
  };
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == n) {
      RatMatrix sub(n, RatVec(n));
      RatVec rhs(n);
      for (int i = 0; i < n; ++i) {
        sub[i] = h.inequalities[pick[i]].a;
        rhs[i] = h.inequalities[pick[i]].b;
      }
      auto x = solve_square(std::move(sub), std::move(rhs));
      if (x && feasible(*x)) found.push_back(std::move(*x));
      return;
    }
    for (int i = start; i <= m - (n - k); ++i) {
      pick[k] = i;
      rec(i + 1, k + 1);
    }
  };
  if (m >= n) rec(0, 0);
  auto lex = [](const RatVec& a, const RatVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(found.begin(), found.end(), lex);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

inline HPolytope random_system(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dim_pick(1, 4);
  std::uniform_int_distribution<int> coef(-3, 3);
  HPolytope h;
  h.dim = dim_pick(gen);
  std::uniform_int_distribution<int> m_pick(h.dim, 10);
  int m = m_pick(gen);
  for (int i = 0; i < m; ++i) {
    RatVec a(h.dim);
    bool zero = true;
    for (auto& v : a) {
      int c = coef(gen);
      v = c;
      if (c != 0) zero = false;
    }
    if (zero) continue;
    h.inequalities.push_back({std::move(a), Rational(coef(gen))});
  }
  return h;
}

}  // namespace dwf::testing
