// Double description on homogenized cones and the operations built on it.

#include "dwf/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace dwf {

namespace {

using Bitset = boost::dynamic_bitset<>;

bool lex_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::uint64_t rows_fingerprint(const std::vector<IntVec>& rows) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& r : rows)
    for (const auto& v : r) mix(v.str() + ",");
  return h;
}

struct DdState {
  std::vector<IntVec> rays;
  std::vector<Bitset> tight;
  std::vector<bool> processed;
  std::size_t inserted = 0;  // processed row count
};

void save_checkpoint(const std::string& path, const DdState& st,
                     std::uint64_t fingerprint) {
  nlohmann::json j;
  j["version"] = 1;
  j["fingerprint"] = fingerprint;
  j["inserted"] = st.inserted;
  nlohmann::json rays = nlohmann::json::array();
  for (const auto& r : st.rays) {
    nlohmann::json rr = nlohmann::json::array();
    for (const auto& v : r) rr.push_back(v.str());
    rays.push_back(std::move(rr));
  }
  j["rays"] = std::move(rays);
  nlohmann::json proc = nlohmann::json::array();
  for (bool b : st.processed) proc.push_back(b ? 1 : 0);
  j["processed"] = std::move(proc);
  std::ofstream out(path + ".tmp");
  out << j.dump();
  out.close();
  std::rename((path + ".tmp").c_str(), path.c_str());
}

bool load_checkpoint(const std::string& path, const std::vector<IntVec>& rows,
                     std::uint64_t fingerprint, DdState& st) {
  std::ifstream in(path);
  if (!in.good()) return false;
  nlohmann::json j;
  in >> j;
  if (j.value("version", 0) != 1 || j.value("fingerprint", 0ull) != fingerprint) return false;
  st.rays.clear();
  for (const auto& rr : j.at("rays")) {
    IntVec r;
    for (const auto& v : rr) r.emplace_back(v.get<std::string>());
    st.rays.push_back(std::move(r));
  }
  st.processed.clear();
  for (const auto& b : j.at("processed")) st.processed.push_back(b.get<int>() != 0);
  st.inserted = j.at("inserted").get<std::size_t>();
  if (st.processed.size() != rows.size()) return false;
  // tight masks are reconstructed exactly from the processed rows
  const std::size_t m = rows.size();
  st.tight.assign(st.rays.size(), Bitset(m));
  for (std::size_t r = 0; r < st.rays.size(); ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!st.processed[i]) continue;
      Int v = idot(rows[i], st.rays[r]);
      if (v < 0) return false;  // corrupt checkpoint
      if (v == 0) st.tight[r].set(i);
    }
  }
  return true;
}

}  // namespace

DdResult dd_cone(const std::vector<IntVec>& rows, const DdOptions& opts) {
  if (rows.empty()) throw std::invalid_argument("dd_cone: no rows");
  const std::size_t m = rows.size();
  const int dim = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("dd_cone: ragged rows");

  DdState st;
  const std::uint64_t fingerprint = rows_fingerprint(rows);
  bool resumed = !opts.checkpoint_path.empty() &&
                 load_checkpoint(opts.checkpoint_path, rows, fingerprint, st);

  if (!resumed) {
    // initial simplicial cone from the first full-rank row subset
    RankTracker rt(dim);
    std::vector<int> basis_rows;
    for (std::size_t i = 0; i < m && rt.rank() < dim; ++i) {
      if (rt.add(rows[i])) basis_rows.push_back(static_cast<int>(i));
    }
    if (rt.rank() < dim)
      throw std::domain_error("dd_cone: rows have rank " + std::to_string(rt.rank()) +
                              " < " + std::to_string(dim) + " (cone not pointed)");
    RatMatrix basis(dim, RatVec(dim));
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j) basis[k][j] = rows[basis_rows[k]][j];
    auto inv = invert(std::move(basis));
    if (!inv) throw std::runtime_error("dd_cone: basis inversion failed");
    st.processed.assign(m, false);
    for (int k = 0; k < dim; ++k) st.processed[basis_rows[k]] = true;
    st.inserted = basis_rows.size();
    for (int col = 0; col < dim; ++col) {
      RatVec column(dim);
      for (int r = 0; r < dim; ++r) column[r] = (*inv)[r][col];
      auto [ray, mu] = scale_direction(column);
      Bitset t(m);
      for (int k = 0; k < dim; ++k) {
        // M ray = mu * e_col >= 0: tight exactly at the other basis rows
        if (k != col) t.set(basis_rows[k]);
      }
      st.rays.push_back(std::move(ray));
      st.tight.push_back(std::move(t));
    }
  }

  std::size_t max_rays = st.rays.size();
  std::size_t since_checkpoint = 0;

  for (std::size_t k = 0; k < m; ++k) {
    if (st.processed[k]) continue;
    const IntVec& row = rows[k];
    const std::size_t nrays = st.rays.size();
    std::vector<Int> vals(nrays);
    bool any_neg = false;
    for (std::size_t r = 0; r < nrays; ++r) {
      vals[r] = idot(row, st.rays[r]);
      if (vals[r] < 0) any_neg = true;
    }
    st.processed[k] = true;
    st.inserted++;
    if (!any_neg) {
      for (std::size_t r = 0; r < nrays; ++r)
        if (vals[r] == 0) st.tight[r].set(k);
    } else {
      std::vector<std::size_t> pos, zer, neg;
      for (std::size_t r = 0; r < nrays; ++r) {
        if (vals[r] > 0) pos.push_back(r);
        else if (vals[r] == 0) zer.push_back(r);
        else neg.push_back(r);
      }
      std::vector<IntVec> new_rays;
      std::vector<Bitset> new_tight;
      const std::size_t min_common = dim >= 2 ? static_cast<std::size_t>(dim - 2) : 0;
      for (std::size_t rp : pos) {
        for (std::size_t rn : neg) {
          Bitset common = st.tight[rp] & st.tight[rn];
          if (common.count() < min_common) continue;
          bool adjacent = true;
          for (std::size_t r3 = 0; r3 < nrays; ++r3) {
            if (r3 == rp || r3 == rn) continue;
            if (common.is_subset_of(st.tight[r3])) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          // w = (row.r+) r-  -  (row.r-) r+   (positive combination)
          IntVec w(dim);
          for (int j = 0; j < dim; ++j) w[j] = vals[rp] * st.rays[rn][j] - vals[rn] * st.rays[rp][j];
          normalize_content(w);
          Bitset t(m);
          for (std::size_t i = 0; i < m; ++i) {
            if (!st.processed[i]) continue;
            if (idot(rows[i], w) == 0) t.set(i);
          }
          new_rays.push_back(std::move(w));
          new_tight.push_back(std::move(t));
        }
      }
      std::vector<IntVec> rays2;
      std::vector<Bitset> tight2;
      rays2.reserve(pos.size() + zer.size() + new_rays.size());
      for (std::size_t r : pos) {
        rays2.push_back(std::move(st.rays[r]));
        tight2.push_back(std::move(st.tight[r]));
      }
      for (std::size_t r : zer) {
        st.tight[r].set(k);
        rays2.push_back(std::move(st.rays[r]));
        tight2.push_back(std::move(st.tight[r]));
      }
      for (std::size_t r = 0; r < new_rays.size(); ++r) {
        rays2.push_back(std::move(new_rays[r]));
        tight2.push_back(std::move(new_tight[r]));
      }
      st.rays = std::move(rays2);
      st.tight = std::move(tight2);
    }
    max_rays = std::max(max_rays, st.rays.size());
    if (opts.progress) opts.progress(st.inserted, m, st.rays.size());
    if (!opts.checkpoint_path.empty() && opts.checkpoint_every > 0 &&
        ++since_checkpoint >= static_cast<std::size_t>(opts.checkpoint_every)) {
      save_checkpoint(opts.checkpoint_path, st, fingerprint);
      since_checkpoint = 0;
    }
    if (opts.max_rays > 0 && st.rays.size() > opts.max_rays) {
      if (!opts.checkpoint_path.empty()) save_checkpoint(opts.checkpoint_path, st, fingerprint);
      throw std::length_error(
          "dd_cone: intermediate ray count " + std::to_string(st.rays.size()) +
          " exceeds the configured limit" +
          (opts.checkpoint_path.empty() ? "" : "; state checkpointed at " + opts.checkpoint_path));
    }
  }

  DdResult res;
  res.rays = std::move(st.rays);
  std::sort(res.rays.begin(), res.rays.end(), lex_less_int);
  res.max_intermediate_rays = max_rays;
  return res;
}

IntVec homogenize(const Inequality& iq) {
  auto [a, b] = scale_to_integer(iq.a, iq.b);
  IntVec row(a.size() + 1);
  row[0] = -b;
  for (size_t j = 0; j < a.size(); ++j) row[j + 1] = a[j];
  return row;
}

VPolytope VPolytope::from_points(int dim, RatMatrix points) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("VPolytope: point dimension mismatch");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {dim, std::move(points)};
}

namespace {

// Substitution x_pivot = T x_free + t0 from the equality rows; empty when the
// equalities are inconsistent.
struct EqualityReduction {
  bool consistent = true;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  RatMatrix t;   // |pivot| x |free|
  RatVec t0;     // |pivot|
};

EqualityReduction reduce_equalities(const HPolytope& h) {
  EqualityReduction red;
  const int n = h.dim;
  RatMatrix rows;
  for (const auto& eq : h.equalities) {
    RatVec r = eq.e;
    r.push_back(eq.f);
    rows.push_back(std::move(r));
  }
  // echelon form
  RatMatrix elim;
  std::vector<int> pivots;
  for (RatVec row : rows) {
    for (size_t r = 0; r < elim.size(); ++r) {
      if (row[pivots[r]] != 0) {
        Rational c = row[pivots[r]] / elim[r][pivots[r]];
        for (int j = 0; j <= n; ++j) row[j] -= c * elim[r][j];
      }
    }
    int lead = -1;
    for (int j = 0; j < n; ++j)
      if (row[j] != 0) { lead = j; break; }
    if (lead < 0) {
      if (row[n] != 0) {
        red.consistent = false;
        return red;
      }
      continue;
    }
    pivots.push_back(lead);
    elim.push_back(std::move(row));
  }
  // back-substitution to reduced form
  for (int r = static_cast<int>(elim.size()) - 1; r >= 0; --r) {
    Rational inv = 1 / elim[r][pivots[r]];
    for (int j = 0; j <= n; ++j) elim[r][j] *= inv;
    for (int r2 = 0; r2 < r; ++r2) {
      Rational c = elim[r2][pivots[r]];
      if (c == 0) continue;
      for (int j = 0; j <= n; ++j) elim[r2][j] -= c * elim[r][j];
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int j = 0; j < n; ++j) (is_pivot[j] ? red.pivot_cols : red.free_cols).push_back(j);
  const int nf = static_cast<int>(red.free_cols.size());
  red.t.assign(red.pivot_cols.size(), RatVec(nf, 0));
  red.t0.assign(red.pivot_cols.size(), 0);
  // elim rows are ordered by insertion; map pivot col -> row
  for (size_t r = 0; r < elim.size(); ++r) {
    int pc = pivots[r];
    auto it = std::find(red.pivot_cols.begin(), red.pivot_cols.end(), pc);
    size_t pi = it - red.pivot_cols.begin();
    for (int fj = 0; fj < nf; ++fj) red.t[pi][fj] = -elim[r][red.free_cols[fj]];
    red.t0[pi] = elim[r][n];
  }
  return red;
}

RatVec expand_point(const EqualityReduction& red, int n, const RatVec& xfree) {
  RatVec x(n, 0);
  for (size_t fj = 0; fj < red.free_cols.size(); ++fj) x[red.free_cols[fj]] = xfree[fj];
  for (size_t pi = 0; pi < red.pivot_cols.size(); ++pi) {
    Rational v = red.t0[pi];
    for (size_t fj = 0; fj < red.free_cols.size(); ++fj) v += red.t[pi][fj] * xfree[fj];
    x[red.pivot_cols[pi]] = v;
  }
  return x;
}

VertexEnumResult enumerate_no_equalities(const HPolytope& h, const VertexEnumOptions& opts);

}  // namespace

VertexEnumResult vertex_enumeration(const HPolytope& h, const VertexEnumOptions& opts) {
  if (h.dim < 1) throw std::invalid_argument("vertex_enumeration: dim must be >= 1");
  if (h.equalities.empty()) return enumerate_no_equalities(h, opts);

  EqualityReduction red = reduce_equalities(h);
  if (!red.consistent) return {VPolytope{h.dim, {}}, false, 0};
  const int nf = static_cast<int>(red.free_cols.size());
  if (nf == 0) {
    RatVec x = expand_point(red, h.dim, {});
    for (const auto& iq : h.inequalities)
      if (rdot(iq.a, x) < iq.b) return {VPolytope{h.dim, {}}, false, 0};
    return {VPolytope::from_points(h.dim, {x}), true, 1};
  }
  HPolytope reduced;
  reduced.dim = nf;
  for (const auto& iq : h.inequalities) {
    RatVec a(nf, 0);
    Rational b = iq.b;
    for (int fj = 0; fj < nf; ++fj) a[fj] = iq.a[red.free_cols[fj]];
    for (size_t pi = 0; pi < red.pivot_cols.size(); ++pi) {
      const Rational& coef = iq.a[red.pivot_cols[pi]];
      if (coef == 0) continue;
      for (int fj = 0; fj < nf; ++fj) a[fj] += coef * red.t[pi][fj];
      b -= coef * red.t0[pi];
    }
    bool zero = true;
    for (const auto& v : a)
      if (v != 0) { zero = false; break; }
    if (zero) {
      if (b > 0) return {VPolytope{h.dim, {}}, false, 0};
      continue;
    }
    reduced.inequalities.push_back({std::move(a), std::move(b)});
  }
  VertexEnumResult inner = vertex_enumeration(reduced, opts);
  RatMatrix verts;
  for (const auto& vf : inner.poly.vertices) verts.push_back(expand_point(red, h.dim, vf));
  return {VPolytope::from_points(h.dim, std::move(verts)), inner.feasible,
          inner.max_intermediate_rays};
}

namespace {

VertexEnumResult dd_backend(const HPolytope& h, const VertexEnumOptions& opts) {
  const int n = h.dim;
  std::vector<IntVec> rows;
  IntVec x0row(n + 1, 0);
  x0row[0] = 1;
  rows.push_back(std::move(x0row));
  for (const auto& iq : h.inequalities) rows.push_back(homogenize(iq));

  DdOptions dopts{opts.checkpoint_path, opts.checkpoint_every, opts.max_rays, opts.progress};
  DdResult dd = dd_cone(rows, dopts);
  RatMatrix verts;
  for (const auto& ray : dd.rays) {
    if (ray[0] == 0) {
      // recession direction; cannot happen for a bounded polytope
      throw std::runtime_error("vertex_enumeration: recession ray in bounded polytope");
    }
    RatVec v(n);
    for (int j = 0; j < n; ++j) v[j] = Rational(ray[j + 1], ray[0]);
    verts.push_back(std::move(v));
  }
  return {VPolytope::from_points(n, std::move(verts)), true, dd.max_intermediate_rays};
}

VertexEnumResult polar_backend(const HPolytope& h, const VertexEnumOptions& opts) {
  const int n = h.dim;
  // strict interior point via max-margin LP: a.x - t |a|_1 >= b, 0 <= t <= 1
  HPolytope margin;
  margin.dim = n + 1;
  for (const auto& iq : h.inequalities) {
    RatVec a = iq.a;
    Rational l1 = 0;
    for (const auto& v : iq.a) l1 += abs(v);
    a.push_back(-l1);
    margin.inequalities.push_back({std::move(a), iq.b});
  }
  RatVec tpos(n + 1, 0), obj(n + 1, 0);
  tpos[n] = 1;
  obj[n] = 1;
  margin.inequalities.push_back({tpos, 0});
  RatVec tcap(n + 1, 0);
  tcap[n] = -1;
  margin.inequalities.push_back({std::move(tcap), -1});
  LpResult ip = lp_solve(obj, margin, LpSense::maximize);
  if (ip.status != LpStatus::optimal) throw std::runtime_error("polar backend: margin LP failed");
  if (ip.value <= 0) {
    // not full-dimensional; the dd backend handles that case
    VertexEnumOptions fallback = opts;
    fallback.backend = VertexEnumOptions::Backend::dd;
    return dd_backend(h, fallback);
  }
  RatVec z(ip.point.begin(), ip.point.begin() + n);

  // dual points -a_i / (a_i.z - b_i); facets of their hull are the vertices
  std::vector<IntVec> rows;
  for (const auto& iq : h.inequalities) {
    Rational s = rdot(iq.a, z) - iq.b;
    RatVec c(n);
    for (int j = 0; j < n; ++j) c[j] = -iq.a[j] / s;
    auto [ci, bi] = scale_to_integer(c, 1);
    IntVec row(n + 1);
    row[0] = bi;
    for (int j = 0; j < n; ++j) row[j + 1] = ci[j];
    rows.push_back(std::move(row));
  }
  DdOptions dopts{opts.checkpoint_path, opts.checkpoint_every, opts.max_rays, opts.progress};
  DdResult dd = dd_cone(rows, dopts);
  RatMatrix verts;
  for (const auto& ray : dd.rays) {
    if (ray[0] <= 0)
      throw std::runtime_error("polar backend: non-positive facet offset (unbounded input?)");
    RatVec v(n);
    for (int j = 0; j < n; ++j) v[j] = z[j] - Rational(ray[j + 1], ray[0]);
    verts.push_back(std::move(v));
  }
  return {VPolytope::from_points(n, std::move(verts)), true, dd.max_intermediate_rays};
}

VertexEnumResult enumerate_no_equalities(const HPolytope& h, const VertexEnumOptions& opts) {
  const int n = h.dim;
  // drop zero rows; they are either vacuous or certify emptiness
  HPolytope clean;
  clean.dim = n;
  for (const auto& iq : h.inequalities) {
    bool zero = true;
    for (const auto& v : iq.a)
      if (v != 0) { zero = false; break; }
    if (zero) {
      if (iq.b > 0) return {VPolytope{n, {}}, false, 0};
      continue;
    }
    clean.inequalities.push_back(iq);
  }
  RatVec zero_obj(n, 0);
  if (lp_solve(zero_obj, clean, LpSense::maximize).status == LpStatus::infeasible)
    return {VPolytope{n, {}}, false, 0};
  if (!opts.assume_bounded && !is_bounded(clean))
    throw std::domain_error("vertex_enumeration: polytope is unbounded");
  if (opts.backend == VertexEnumOptions::Backend::polar) return polar_backend(clean, opts);
  return dd_backend(clean, opts);
}

}  // namespace

HPolytope facet_enumeration(const VPolytope& v) {
  const int n = v.dim;
  if (v.vertices.empty()) throw std::domain_error("facet_enumeration: empty vertex set");
  RatMatrix diffs;
  for (size_t k = 1; k < v.vertices.size(); ++k) {
    RatVec d(n);
    for (int j = 0; j < n; ++j) d[j] = v.vertices[k][j] - v.vertices[0][j];
    diffs.push_back(std::move(d));
  }
  int affine_dim = diffs.empty() ? 0 : rank(diffs);
  if (affine_dim < n)
    throw std::domain_error("facet_enumeration: hull is degenerate (affine dimension " +
                            std::to_string(affine_dim) + " < " + std::to_string(n) + ")");
  std::vector<IntVec> rows;
  for (const auto& vert : v.vertices) {
    auto [vi, bi] = scale_to_integer(vert, 1);
    IntVec row(n + 1);
    row[0] = bi;
    for (int j = 0; j < n; ++j) row[j + 1] = vi[j];
    rows.push_back(std::move(row));
  }
  DdResult dd = dd_cone(rows);
  HPolytope out;
  out.dim = n;
  for (const auto& ray : dd.rays) {
    // ray (c0, c): c.x >= -c0 valid on the hull, tight on a facet
    RatVec a(n);
    for (int j = 0; j < n; ++j) a[j] = ray[j + 1];
    out.inequalities.push_back({std::move(a), Rational(-ray[0])});
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(),
            [](const Inequality& x, const Inequality& y) {
              if (x.a != y.a) return lex_less(x.a, y.a);
              return x.b < y.b;
            });
  return out;
}

MembershipResult hull_membership(const VPolytope& v, const RatVec& x) {
  const int n = v.dim;
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("hull_membership: dimension");
  const int m = static_cast<int>(v.vertices.size());
  if (m == 0) throw std::invalid_argument("hull_membership: empty vertex set");

  // feasibility in weight space: q >= 0, sum q = 1, sum q v_k = x
  HPolytope weights;
  weights.dim = m;
  for (int k = 0; k < m; ++k) {
    RatVec a(m, 0);
    a[k] = 1;
    weights.inequalities.push_back({std::move(a), 0});
  }
  for (int j = 0; j < n; ++j) {
    RatVec e(m);
    for (int k = 0; k < m; ++k) e[k] = v.vertices[k][j];
    weights.equalities.push_back({std::move(e), x[j]});
  }
  weights.equalities.push_back({RatVec(m, 1), 1});
  LpResult feas = lp_solve(RatVec(m, 0), weights, LpSense::maximize);
  if (feas.status == LpStatus::optimal) {
    MembershipResult res;
    res.inside = true;
    for (int k = 0; k < m; ++k)
      if (feas.point[k] != 0) res.combination.weights.emplace_back(k, feas.point[k]);
    return res;
  }

  // separation: g.v_k - t >= 0 for all k, g.x - t <= -1
  HPolytope sep;
  sep.dim = n + 1;
  for (const auto& vert : v.vertices) {
    RatVec a(n + 1);
    for (int j = 0; j < n; ++j) a[j] = vert[j];
    a[n] = -1;
    sep.inequalities.push_back({std::move(a), 0});
  }
  RatVec ax(n + 1);
  for (int j = 0; j < n; ++j) ax[j] = -x[j];
  ax[n] = 1;
  sep.inequalities.push_back({std::move(ax), 1});
  LpResult s = lp_solve(RatVec(n + 1, 0), sep, LpSense::maximize);
  if (s.status != LpStatus::optimal)
    throw std::runtime_error("hull_membership: separation LP failed");
  MembershipResult res;
  res.inside = false;
  res.separator.a.assign(s.point.begin(), s.point.begin() + n);
  res.separator.b = s.point[n];
  return res;
}

RedundancyReport remove_redundant(const HPolytope& h) {
  RedundancyReport rep;
  rep.reduced = h;
  size_t i = 0;
  while (i < rep.reduced.inequalities.size()) {
    HPolytope test = rep.reduced;
    Inequality row = test.inequalities[i];
    test.inequalities.erase(test.inequalities.begin() + i);
    LpResult r = lp_solve(row.a, test, LpSense::minimize);
    if (r.status == LpStatus::optimal && r.value >= row.b) {
      rep.reduced = std::move(test);
      rep.removed++;
    } else {
      ++i;
    }
  }
  return rep;
}

VertexDiff polytope_equal(const VPolytope& enumerated, const VPolytope& conjectured) {
  if (enumerated.dim != conjectured.dim)
    throw std::invalid_argument("polytope_equal: dimension mismatch");
  VertexDiff diff;
  RatMatrix a = enumerated.vertices, b = conjectured.vertices;
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j >= b.size() || (i < a.size() && lex_less(a[i], b[j]))) {
      diff.extra.push_back(a[i++]);
    } else {
      diff.missing.push_back(b[j++]);
    }
  }
  diff.equal = diff.missing.empty() && diff.extra.empty();
  return diff;
}

}  // namespace dwf
