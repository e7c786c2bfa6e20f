#include "dwf/wigner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "dwf/polytope.hpp"

namespace dwf {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdFloor = -1e-9;
constexpr double kEntryTol = 1e-10;

void check_perm(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
      throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

DensityMatrix DensityMatrix::validated(CMatrix m) {
  if (m.rows() != m.cols() || m.rows() < 2) throw std::invalid_argument("density matrix must be square");
  double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol)
    throw std::invalid_argument("density matrix not Hermitian (deviation " + std::to_string(herm) + ")");
  double tr = std::abs(m.trace() - Cx(1, 0));
  if (tr > kTraceTol)
    throw std::invalid_argument("density matrix trace differs from 1 by " + std::to_string(tr));
  DensityMatrix rho{static_cast<int>(m.rows()), std::move(m)};
  double min_eig = rho.min_eigenvalue();
  if (min_eig < kPsdFloor)
    throw std::invalid_argument("density matrix has eigenvalue " + std::to_string(min_eig));
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((rho + rho.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

DensityMatrix random_state(int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = Cx(gauss(gen), gauss(gen));
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::validated(std::move(rho));
}

PMatrix PMatrix::from_float(std::vector<std::vector<double>> rows) {
  const int d = static_cast<int>(rows.empty() ? 0 : rows[0].size());
  if (d < 2 || static_cast<int>(rows.size()) != d + 1)
    throw std::invalid_argument("p table must be (d+1) x d");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("ragged p table");
    double sum = 0;
    for (double v : row) {
      if (v < -kEntryTol || v > 1 + kEntryTol)
        throw std::invalid_argument("p entry out of [0,1]: " + std::to_string(v));
      sum += v;
    }
    if (std::abs(sum - 1) > kEntryTol)
      throw std::invalid_argument("p row sums to " + std::to_string(sum));
  }
  return {d, false, std::move(rows), {}};
}

PMatrix PMatrix::from_exact(std::vector<RatVec> rows) {
  const int d = static_cast<int>(rows.empty() ? 0 : rows[0].size());
  if (d < 2 || static_cast<int>(rows.size()) != d + 1)
    throw std::invalid_argument("p table must be (d+1) x d");
  PMatrix p;
  p.d = d;
  p.exact = true;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("ragged p table");
    Rational sum = 0;
    std::vector<double> frow(d);
    for (int j = 0; j < d; ++j) {
      if (row[j] < 0 || row[j] > 1) throw std::invalid_argument("exact p entry out of [0,1]");
      sum += row[j];
      frow[j] = to_double(row[j]);
    }
    if (sum != 1) throw std::invalid_argument("exact p row must sum to 1");
    p.rows.push_back(std::move(frow));
  }
  p.rows_exact = std::move(rows);
  return p;
}

WignerDefinition WignerDefinition::canonical(int d) {
  WignerDefinition defn;
  defn.d = d;
  defn.striation_perm.resize(d + 1);
  for (int i = 0; i <= d; ++i) defn.striation_perm[i] = i;
  std::vector<int> id(d);
  for (int j = 0; j < d; ++j) id[j] = j;
  defn.line_perms.assign(d + 1, id);
  return defn;
}

bool WignerDefinition::valid() const {
  if (static_cast<int>(striation_perm.size()) != d + 1) return false;
  if (static_cast<int>(line_perms.size()) != d + 1) return false;
  try {
    check_perm(striation_perm);
    for (const auto& lp : line_perms) {
      if (static_cast<int>(lp.size()) != d) return false;
      check_perm(lp);
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

std::vector<int> WignerDefinition::striation_inverse() const { return inverse_perm(striation_perm); }

std::vector<std::vector<int>> WignerDefinition::line_inverses() const {
  std::vector<std::vector<int>> out;
  out.reserve(line_perms.size());
  for (const auto& lp : line_perms) out.push_back(inverse_perm(lp));
  return out;
}

double WignerTable::sum() const {
  double s = 0;
  for (const auto& row : w)
    for (double v : row) s += v;
  return s;
}

double WignerTable::min_entry() const {
  double m = w[0][0];
  for (const auto& row : w)
    for (double v : row) m = std::min(m, v);
  return m;
}

double WignerTable::negative_sum() const {
  double s = 0;
  for (const auto& row : w)
    for (double v : row)
      if (v < 0) s += v;
  return s;
}

PMatrix p_matrix_from_state(const DensityMatrix& rho, const MubSet& mubs) {
  if (rho.d != mubs.d()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::vector<double>> rows;
  for (const auto& basis : mubs.bases()) {
    std::vector<double> row(rho.d);
    for (int j = 0; j < rho.d; ++j) {
      Cx val = basis.vectors.col(j).adjoint() * rho.rho * basis.vectors.col(j);
      row[j] = val.real();
    }
    rows.push_back(std::move(row));
  }
  return PMatrix::from_float(std::move(rows));
}

WignerTable wigner_from_p(const PMatrix& p, const WignerDefinition& defn, const StriationSet& s) {
  const int d = s.d();
  if (p.d != d || defn.d != d) throw std::invalid_argument("dimension mismatch");
  if (!defn.valid()) throw std::invalid_argument("invalid definition");
  const auto sinv = defn.striation_inverse();
  const auto linv = defn.line_inverses();

  WignerTable table;
  table.d = d;
  table.w.assign(d, std::vector<double>(d, 0.0));
  if (p.exact) {
    table.exact = true;
    table.w_exact.assign(d, RatVec(d, 0));
  }
  for (int qi = 0; qi < d; ++qi) {
    for (int pi = 0; pi < d; ++pi) {
      const auto lines = s.lines_through(s.point_at(qi, pi));
      double acc = -1.0;
      Rational acc_q = -1;
      for (const auto& lid : lines) {
        int basis = sinv[lid.striation];
        int vec = linv[basis][lid.line];
        acc += p.rows[basis][vec];
        if (p.exact) acc_q += p.rows_exact[basis][vec];
      }
      table.w[pi][qi] = acc / d;
      if (p.exact) table.w_exact[pi][qi] = acc_q / d;
    }
  }
  return table;
}

double line_sum_check(const WignerTable& w, const WignerDefinition& defn, const StriationSet& s,
                      const PMatrix& p) {
  const int d = s.d();
  const auto sinv = defn.striation_inverse();
  const auto linv = defn.line_inverses();
  double worst = 0;
  for (const auto& st : s.striations()) {
    for (const auto& line : st.lines) {
      double sum = 0;
      for (const auto& pt : line.points) sum += w.at(s.field().index(pt.q), s.field().index(pt.p));
      int basis = sinv[st.index];
      int vec = linv[basis][line.line_index];
      worst = std::max(worst, std::abs(sum - p.rows[basis][vec]));
    }
  }
  return worst;
}

WignerTable qubit_closed_form(const PMatrix& p) {
  if (p.d != 2) throw std::invalid_argument("qubit_closed_form requires d = 2");
  WignerTable t;
  t.d = 2;
  t.w.assign(2, std::vector<double>(2, 0.0));
  // canonical-definition line pattern: vertical, horizontal, diagonal
  t.w[0][0] = (p.rows[0][0] + p.rows[1][0] + p.rows[2][0] - 1) / 2;
  t.w[0][1] = (p.rows[0][1] + p.rows[1][0] + p.rows[2][1] - 1) / 2;
  t.w[1][0] = (p.rows[0][0] + p.rows[1][1] + p.rows[2][1] - 1) / 2;
  t.w[1][1] = (p.rows[0][1] + p.rows[1][1] + p.rows[2][0] - 1) / 2;
  if (p.exact) {
    t.exact = true;
    t.w_exact.assign(2, RatVec(2, 0));
    const auto& r = p.rows_exact;
    t.w_exact[0][0] = (r[0][0] + r[1][0] + r[2][0] - 1) / 2;
    t.w_exact[0][1] = (r[0][1] + r[1][0] + r[2][1] - 1) / 2;
    t.w_exact[1][0] = (r[0][0] + r[1][1] + r[2][1] - 1) / 2;
    t.w_exact[1][1] = (r[0][1] + r[1][1] + r[2][0] - 1) / 2;
  }
  return t;
}

StateReconstruction state_from_p(const PMatrix& p, const MubSet& mubs) {
  if (p.d != mubs.d()) throw std::invalid_argument("dimension mismatch");
  const int d = p.d;
  CMatrix rho = -CMatrix::Identity(d, d);
  for (int i = 0; i <= d; ++i) {
    const CMatrix& v = mubs.basis_vectors(i);
    for (int j = 0; j < d; ++j) rho += p.rows[i][j] * (v.col(j) * v.col(j).adjoint());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es((rho + rho.adjoint()) / 2.0);
  return {std::move(rho), es.eigenvalues().minCoeff()};
}

CMatrix phase_point_operator(const PhasePoint& alpha, const WignerDefinition& defn,
                             const StriationSet& s, const MubSet& mubs) {
  const int d = s.d();
  const auto sinv = defn.striation_inverse();
  const auto linv = defn.line_inverses();
  CMatrix a = -CMatrix::Identity(d, d);
  for (const auto& lid : s.lines_through(alpha)) {
    int basis = sinv[lid.striation];
    int vec = linv[basis][lid.line];
    const auto col = mubs.basis_vectors(basis).col(vec);
    a += col * col.adjoint();
  }
  return a;
}

DefinitionEnumerator::DefinitionEnumerator(int d, std::int64_t cap) {
  Int total = count(d);
  if (total > cap)
    throw std::length_error("definition count " + total.str() + " exceeds cap " +
                            std::to_string(cap));
  current_ = WignerDefinition::canonical(d);
}

Int DefinitionEnumerator::count(int d) {
  auto fact = [](int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  Int c = fact(d + 1);
  Int fd = fact(d);
  for (int i = 0; i <= d; ++i) c *= fd;
  return c;
}

void DefinitionEnumerator::advance() {
  if (done_) return;
  // odometer: last line permutation fastest, striation permutation slowest
  for (int i = current_.d; i >= 0; --i) {
    if (std::next_permutation(current_.line_perms[i].begin(), current_.line_perms[i].end()))
      return;
  }
  if (std::next_permutation(current_.striation_perm.begin(), current_.striation_perm.end()))
    return;
  done_ = true;
}

WignerDefinition random_definition(int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  WignerDefinition defn = WignerDefinition::canonical(d);
  std::shuffle(defn.striation_perm.begin(), defn.striation_perm.end(), gen);
  for (auto& lp : defn.line_perms) std::shuffle(lp.begin(), lp.end(), gen);
  return defn;
}

std::vector<IntInequality> nonnegativity_system(const WignerDefinition& defn,
                                                const StriationSet& s) {
  const int d = s.d();
  if (defn.d != d) throw std::invalid_argument("dimension mismatch");
  const auto sinv = defn.striation_inverse();
  const auto linv = defn.line_inverses();
  const int ncols = (d + 1) * (d - 1);
  std::vector<IntInequality> rows;
  rows.reserve(d * d);
  for (int qi = 0; qi < d; ++qi) {
    for (int pi = 0; pi < d; ++pi) {
      IntInequality ineq{IntVec(ncols, 0), 1};
      for (const auto& lid : s.lines_through(s.point_at(qi, pi))) {
        int basis = sinv[lid.striation];
        int vec = linv[basis][lid.line];
        if (vec <= d - 2) {
          ineq.a[basis * (d - 1) + vec] += 1;
        } else {
          ineq.b -= 1;
          for (int j = 0; j < d - 1; ++j) ineq.a[basis * (d - 1) + j] -= 1;
        }
      }
      rows.push_back(std::move(ineq));
    }
  }
  return rows;
}

std::vector<DefinitionClass> classify_qubit_definitions(const StriationSet& s) {
  if (s.d() != 2) throw std::invalid_argument("classification is a qubit (d = 2) computation");

  auto canonical_system = [](std::vector<IntInequality> rows) {
    for (auto& r : rows) {
      IntVec joint = r.a;
      joint.push_back(r.b);
      normalize_content(joint);
      for (size_t j = 0; j < r.a.size(); ++j) r.a[j] = joint[j];
      r.b = joint.back();
    }
    std::sort(rows.begin(), rows.end(), [](const IntInequality& x, const IntInequality& y) {
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return rows;
  };

  std::map<std::string, std::size_t> by_key;
  std::vector<DefinitionClass> classes;
  std::int64_t index = 0;
  for (DefinitionEnumerator en(2); !en.done(); en.advance(), ++index) {
    auto system = canonical_system(nonnegativity_system(en.current(), s));
    std::string key;
    for (const auto& r : system) {
      for (const auto& v : r.a) key += v.str() + ",";
      key += ";" + r.b.str() + "|";
    }
    auto [it, fresh] = by_key.try_emplace(key, classes.size());
    if (fresh) {
      DefinitionClass cls;
      cls.system = std::move(system);
      classes.push_back(std::move(cls));
    }
    classes[it->second].definition_indices.push_back(index);
  }
  for (auto& cls : classes) {
    HPolytope h;
    h.dim = static_cast<int>(cls.system[0].a.size());
    for (const auto& r : cls.system) {
      RatVec a(r.a.size());
      for (size_t j = 0; j < r.a.size(); ++j) a[j] = r.a[j];
      h.inequalities.push_back({std::move(a), Rational(r.b)});
    }
    cls.vertices = vertex_enumeration(h).poly.vertices;
  }
  return classes;
}

}  // namespace dwf
