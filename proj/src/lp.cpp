// Exact active-set simplex over the rationals, Bland's anti-cycling rule.
//
// The solver works on max c.x over {x : A x >= b} with integer rows of full
// column rank (the pointed case). At a basic feasible point x with basis B of
// tight rows, solving B^T z = c certifies optimality when z <= 0 (then
// c = sum z_i a_i and c.x = sum z_i b_i matches the dual bound); otherwise
// the smallest basis row with z > 0 leaves the tight set along the edge
// direction d with B d = e_j, and the smallest blocking row among the ratio
// minimizers enters. Rank-deficient systems are reduced onto the constraint
// row space by the public wrapper, equalities become inequality pairs.

#include <stdexcept>

#include "dwf/linalg.hpp"
#include "dwf/polytope.hpp"

namespace dwf {

namespace {

constexpr std::int64_t kIterationGuard = 5'000'000;

struct CoreProblem {
  int n = 0;
  std::vector<IntVec> rows;
  std::vector<Int> rhs;

  int m() const { return static_cast<int>(rows.size()); }
  Rational slack(int i, const RatVec& x) const { return irdot(rows[i], x) - Rational(rhs[i]); }
};

struct CoreResult {
  LpStatus status = LpStatus::infeasible;
  RatVec x;
};

// Move a feasible point to a basic feasible point (tight rank = n), following
// improving null directions of the independent tight rows. Slacks and the
// tight-row rank are maintained incrementally across moves (the tight set
// only grows). Detects unboundedness on the way.
bool crash_to_vertex(const CoreProblem& p, const RatVec& c, RatVec& x, bool& unbounded) {
  unbounded = false;
  const int m = p.m();
  RatVec slacks(m);
  RankTracker rt(p.n);
  std::vector<char> absorbed(m, 0);
  auto absorb_tight = [&] {
    for (int i = 0; i < m; ++i) {
      if (!absorbed[i] && slacks[i] == 0) {
        absorbed[i] = 1;
        rt.add(p.rows[i]);
      }
    }
  };
  for (int i = 0; i < m; ++i) slacks[i] = p.slack(i, x);
  absorb_tight();

  while (rt.rank() < p.n) {
    RatMatrix null = nullspace(rt.basis_rows().empty() ? RatMatrix{RatVec(p.n, 0)}
                                                       : rt.basis_rows());
    if (null.empty()) break;
    RatVec u = std::move(null.front());
    Rational cu = rdot(c, u);
    if (cu < 0) {
      for (auto& v : u) v = -v;
      cu = -cu;
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
      auto [ui, mu] = scale_direction(u);
      std::vector<std::pair<int, Int>> dots;
      int enter = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        Int dot = idot(p.rows[i], ui);
        if (dot != 0) dots.emplace_back(i, dot);
        if (dot < 0) {
          Rational lam = slacks[i] * mu / Rational(-dot);
          if (enter < 0 || lam < best) {
            best = lam;
            enter = i;
          }
        }
      }
      if (enter < 0) {
        if (cu > 0) {
          unbounded = true;
          return false;
        }
        if (attempt == 1)
          throw std::runtime_error("lp: feasible set contains a line (rows not full rank?)");
        for (auto& v : u) v = -v;
        continue;
      }
      Rational t = best / mu;
      if (t != 0) {
        for (int j = 0; j < p.n; ++j) x[j] += t * Rational(ui[j]);
        for (auto& [i, dot] : dots) slacks[i] += t * Rational(dot);
      }
      slacks[enter] = 0;
      absorb_tight();
      break;
    }
  }
  return true;
}

CoreResult optimize_from(const CoreProblem& p, const RatVec& c, RatVec x) {
  bool unbounded = false;
  if (!crash_to_vertex(p, c, x, unbounded))
    return {unbounded ? LpStatus::unbounded : LpStatus::infeasible, {}};

  // initial basis: smallest-index independent tight rows
  std::vector<int> basis;
  {
    RankTracker rt(p.n);
    for (int i = 0; i < p.m() && rt.rank() < p.n; ++i) {
      if (p.slack(i, x) == 0 && rt.add(p.rows[i])) basis.push_back(i);
    }
  }
  if (static_cast<int>(basis.size()) != p.n)
    throw std::runtime_error("lp: failed to assemble a basis at a vertex");

  RatVec slacks(p.m());
  for (int i = 0; i < p.m(); ++i) slacks[i] = p.slack(i, x);
  std::vector<char> in_basis(p.m(), 0);
  for (int i : basis) in_basis[i] = 1;

  for (std::int64_t iter = 0; iter < kIterationGuard; ++iter) {
    // z: c expressed over basis rows (B^T z = c)
    RatMatrix bt(p.n, RatVec(p.n));
    for (int k = 0; k < p.n; ++k)
      for (int j = 0; j < p.n; ++j) bt[j][k] = p.rows[basis[k]][j];
    auto z = solve_square(bt, c);
    if (!z) throw std::runtime_error("lp: singular basis");
    int leave_pos = -1;
    for (int k = 0; k < p.n; ++k) {
      if ((*z)[k] > 0 && (leave_pos < 0 || basis[k] < basis[leave_pos])) leave_pos = k;
    }
    if (leave_pos < 0) return {LpStatus::optimal, std::move(x)};

    // edge direction: B d = e_{leave_pos}
    RatMatrix bm(p.n, RatVec(p.n));
    for (int k = 0; k < p.n; ++k)
      for (int j = 0; j < p.n; ++j) bm[k][j] = p.rows[basis[k]][j];
    RatVec e(p.n, 0);
    e[leave_pos] = 1;
    auto dir = solve_square(bm, e);
    if (!dir) throw std::runtime_error("lp: singular basis");
    auto [di, mu] = scale_direction(*dir);

    int enter = -1;
    Rational best_step;
    std::vector<std::pair<int, Int>> dots;  // scanned rows with nonzero movement
    for (int i = 0; i < p.m(); ++i) {
      if (in_basis[i]) continue;
      Int dot = idot(p.rows[i], di);
      if (dot != 0) dots.emplace_back(i, dot);
      if (dot < 0) {
        Rational lam = slacks[i] * mu / Rational(-dot);
        if (enter < 0 || lam < best_step || (lam == best_step && i < enter)) {
          best_step = lam;
          enter = i;
        }
      }
    }
    if (enter < 0) return {LpStatus::unbounded, {}};

    if (best_step != 0) {
      Rational t = best_step / mu;
      for (int j = 0; j < p.n; ++j) x[j] += t * Rational(di[j]);
      for (auto& [i, dot] : dots) slacks[i] += t * Rational(dot);
      slacks[basis[leave_pos]] += best_step;  // a_j . d = 1/mu scaled by step*mu
    }
    slacks[enter] = 0;
    in_basis[basis[leave_pos]] = 0;
    in_basis[enter] = 1;
    basis[leave_pos] = enter;
    std::sort(basis.begin(), basis.end());
  }
  throw std::runtime_error("lp: iteration guard exceeded");
}

CoreResult solve_core(const CoreProblem& p, const RatVec& c) {
  // phase 1: minimize a single violation variable s
  Rational s0 = 0;
  for (const Int& b : p.rhs)
    if (Rational(b) > s0) s0 = Rational(b);
  RatVec x0(p.n, 0);
  if (s0 > 0) {
    CoreProblem ext;
    ext.n = p.n + 1;
    for (int i = 0; i < p.m(); ++i) {
      IntVec r = p.rows[i];
      r.push_back(1);
      ext.rows.push_back(std::move(r));
      ext.rhs.push_back(p.rhs[i]);
    }
    IntVec srow(p.n + 1, 0);
    srow[p.n] = 1;
    ext.rows.push_back(std::move(srow));
    ext.rhs.push_back(0);
    RatVec cext(p.n + 1, 0);
    cext[p.n] = -1;
    RatVec xext(p.n + 1, 0);
    xext[p.n] = s0;
    CoreResult r1 = optimize_from(ext, cext, std::move(xext));
    if (r1.status != LpStatus::optimal) throw std::runtime_error("lp: phase 1 failed");
    if (r1.x[p.n] != 0) return {LpStatus::infeasible, {}};
    x0.assign(r1.x.begin(), r1.x.begin() + p.n);
  }
  return optimize_from(p, c, std::move(x0));
}

}  // namespace

LpResult lp_solve(const RatVec& objective, const HPolytope& h, LpSense sense) {
  const int n = h.dim;
  if (n < 1) throw std::invalid_argument("lp_solve: dimension must be >= 1");
  if (static_cast<int>(objective.size()) != n)
    throw std::invalid_argument("lp_solve: objective dimension mismatch");
  RatVec c = objective;
  if (sense == LpSense::minimize)
    for (auto& v : c) v = -v;

  CoreProblem p;
  p.n = n;
  auto add_row = [&](const RatVec& a, const Rational& b) -> bool {
    auto [ai, bi] = scale_to_integer(a, b);
    bool zero = true;
    for (const Int& v : ai)
      if (v != 0) { zero = false; break; }
    if (zero) return bi <= 0;  // 0 >= b
    p.rows.push_back(std::move(ai));
    p.rhs.push_back(std::move(bi));
    return true;
  };
  for (const auto& iq : h.inequalities) {
    if (static_cast<int>(iq.a.size()) != n) throw std::invalid_argument("lp_solve: row dimension");
    if (!add_row(iq.a, iq.b)) return {LpStatus::infeasible, {}, {}};
  }
  for (const auto& eq : h.equalities) {
    if (static_cast<int>(eq.e.size()) != n) throw std::invalid_argument("lp_solve: row dimension");
    RatVec neg = eq.e;
    for (auto& v : neg) v = -v;
    if (!add_row(eq.e, eq.f) || !add_row(neg, -eq.f)) return {LpStatus::infeasible, {}, {}};
  }

  // row-space reduction when the normals do not span R^n
  std::vector<int> indep;
  {
    RankTracker rt(n);
    for (int i = 0; i < p.m(); ++i)
      if (rt.add(p.rows[i])) indep.push_back(i);
  }
  const int r = static_cast<int>(indep.size());

  auto finish = [&](LpStatus status, RatVec x) -> LpResult {
    if (status != LpStatus::optimal) return {status, {}, {}};
    Rational value = rdot(c, x);
    if (sense == LpSense::minimize) value = -value;
    return {LpStatus::optimal, std::move(value), std::move(x)};
  };

  if (r == n) {
    CoreResult res = solve_core(p, c);
    return finish(res.status, std::move(res.x));
  }
  if (r == 0) {
    // no effective constraints
    for (const auto& v : c)
      if (v != 0) return {LpStatus::unbounded, {}, {}};
    return finish(LpStatus::optimal, RatVec(n, 0));
  }

  RatMatrix all(p.m(), RatVec(n));
  for (int i = 0; i < p.m(); ++i)
    for (int j = 0; j < n; ++j) all[i][j] = p.rows[i][j];
  RatMatrix null = nullspace(all);
  bool c_escapes = false;
  for (const auto& nu : null)
    if (rdot(c, nu) != 0) { c_escapes = true; break; }

  // parametrize x = Rspace^T zeta
  RatMatrix rspace;
  for (int i : indep) {
    RatVec row(n);
    for (int j = 0; j < n; ++j) row[j] = p.rows[i][j];
    rspace.push_back(std::move(row));
  }
  CoreProblem red;
  red.n = r;
  for (int i = 0; i < p.m(); ++i) {
    RatVec row(r);
    for (int k = 0; k < r; ++k) row[k] = irdot(p.rows[i], rspace[k]);
    auto [ai, bi] = scale_to_integer(row, Rational(p.rhs[i]));
    red.rows.push_back(std::move(ai));
    red.rhs.push_back(std::move(bi));
  }
  RatVec cred(r);
  for (int k = 0; k < r; ++k) cred[k] = rdot(rspace[k], c);
  CoreResult res = solve_core(red, cred);
  if (res.status == LpStatus::infeasible) return {LpStatus::infeasible, {}, {}};
  if (c_escapes || res.status == LpStatus::unbounded) return {LpStatus::unbounded, {}, {}};
  RatVec x(n, 0);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < n; ++j) x[j] += res.x[k] * rspace[k][j];
  return finish(LpStatus::optimal, std::move(x));
}

bool is_bounded(const HPolytope& h) {
  RatVec obj(h.dim, 0);
  for (int k = 0; k < h.dim; ++k) {
    obj[k] = 1;
    for (LpSense sense : {LpSense::maximize, LpSense::minimize}) {
      LpResult r = lp_solve(obj, h, sense);
      if (r.status == LpStatus::unbounded) return false;
      if (r.status == LpStatus::infeasible) return true;
    }
    obj[k] = 0;
  }
  return true;
}

}  // namespace dwf
