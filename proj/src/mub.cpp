#include "dwf/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dwf {

namespace {

constexpr double kDiagTol = 1e-9;

Cx unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

CMatrix single_qubit_pauli(char c) {
  CMatrix m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Cx(0, -1), Cx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("unknown Pauli letter");
  }
  return m;
}

// Eigenbasis of X Z^k via the closed-form amplitudes described in the header.
CMatrix xzk_eigenbasis(int d, int k) {
  const double two_pi = 2 * std::numbers::pi;
  CMatrix v(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  // eta^d = omega^{k d(d-1)/2}; eta = 1 for odd d, i^k for d = 2
  const double eta_angle = (d == 2) ? k * std::numbers::pi / 2 : 0.0;
  for (int m = 0; m < d; ++m) {
    const double lambda_angle = eta_angle + two_pi * m / d;
    for (int j = 0; j < d; ++j) {
      // omega^{k j(j-1)/2} lambda^{-j} / sqrt(d)
      double angle = two_pi * k * (static_cast<double>(j) * (j - 1) / 2) / d - lambda_angle * j;
      v(j, m) = unit_phase(angle) * norm;
    }
  }
  return v;
}

const std::vector<std::vector<std::string>>& two_qubit_triples() {
  static const std::vector<std::vector<std::string>> triples = {
      {"ZI", "IZ", "ZZ"}, {"XI", "IX", "XX"}, {"YI", "IY", "YY"},
      {"XY", "YZ", "ZX"}, {"XZ", "YX", "ZY"}};
  return triples;
}

void fix_column_phases(CMatrix& v) {
  for (int c = 0; c < v.cols(); ++c) {
    for (int r = 0; r < v.rows(); ++r) {
      if (std::abs(v(r, c)) > 1e-8) {
        Cx ph = v(r, c) / std::abs(v(r, c));
        v.col(c) /= ph;
        break;
      }
    }
  }
}

// Common eigenbasis of a commuting pair of +-1 Paulis, columns ordered by
// eigenvalue pair (+,+), (+,-), (-,+), (-,-).
CMatrix common_eigenbasis(const CMatrix& a, const CMatrix& b) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(3.0 * a + b);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  CMatrix v(4, 4);
  // eigenvalues 3s+t with s,t in {+1,-1} are {4,2,-2,-4}; solver sorts ascending
  for (int c = 0; c < 4; ++c) v.col(c) = es.eigenvectors().col(3 - c);
  fix_column_phases(v);
  return v;
}

}  // namespace

PauliOperator generalized_pauli(int d, int a, int b) {
  if (!is_prime(d)) throw std::invalid_argument("generalized_pauli: d must be prime");
  a = ((a % d) + d) % d;
  b = ((b % d) + d) % d;
  const double two_pi = 2 * std::numbers::pi;
  CMatrix m = CMatrix::Zero(d, d);
  // (X^a Z^b)|k> = omega^{b k} |k+a>
  for (int k = 0; k < d; ++k) m((k + a) % d, k) = unit_phase(two_pi * b * k / d);
  return {pauli_label(a, b), std::move(m)};
}

PauliOperator pauli_word(const std::string& word) {
  if (word.size() != 2) throw std::invalid_argument("pauli_word: expected a two-letter word");
  CMatrix left = single_qubit_pauli(word[0]);
  CMatrix right = single_qubit_pauli(word[1]);
  CMatrix m(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block(2 * i, 2 * j, 2, 2) = left(i, j) * right;
  return {word, std::move(m)};
}

std::string pauli_label(int a, int b) {
  if (a == 0 && b == 0) return "I";
  std::string s;
  if (a == 1) s += "X";
  else if (a > 1) s += "X^" + std::to_string(a);
  if (b > 0 && !s.empty()) s += " ";
  if (b == 1) s += "Z";
  else if (b > 1) s += "Z^" + std::to_string(b);
  return s;
}

bool MubSet::supported(int d) { return d == 2 || d == 3 || d == 4 || d == 5 || d == 7; }

MubSet MubSet::build(int d) {
  if (!supported(d))
    throw std::invalid_argument("MUB construction supports d in {2,3,4,5,7}, got " +
                                std::to_string(d));
  MubSet set;
  set.d_ = d;
  if (d == 4) {
    const auto& triples = two_qubit_triples();
    for (size_t t = 0; t < triples.size(); ++t) {
      CMatrix a = pauli_word(triples[t][0]).matrix;
      CMatrix b = pauli_word(triples[t][1]).matrix;
      set.bases_.push_back({static_cast<int>(t), common_eigenbasis(a, b)});
    }
    return set;
  }
  set.bases_.push_back({0, CMatrix::Identity(d, d)});  // computational = Z eigenbasis
  for (int k = 0; k < d; ++k) set.bases_.push_back({k + 1, xzk_eigenbasis(d, k)});
  return set;
}

double max_unbiased_deviation(const std::vector<Basis>& bases, int d) {
  double worst = 0;
  const double target = 1.0 / d;
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t k = i + 1; k < bases.size(); ++k) {
      CMatrix g = bases[i].vectors.adjoint() * bases[k].vectors;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          worst = std::max(worst, std::abs(std::norm(g(r, c)) - target));
    }
  }
  return worst;
}

double max_orthonormal_deviation(const std::vector<Basis>& bases, int d) {
  double worst = 0;
  for (const auto& b : bases) {
    CMatrix g = b.vectors.adjoint() * b.vectors;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        worst = std::max(worst, std::abs(std::norm(g(r, c)) - (r == c ? 1.0 : 0.0)));
  }
  return worst;
}

double MubSet::check_unbiased() const { return max_unbiased_deviation(bases_, d_); }

double MubSet::check_orthonormal() const { return max_orthonormal_deviation(bases_, d_); }

double MubSet::check_completeness() const {
  double worst = 0;
  for (const auto& b : bases_) {
    CMatrix s = b.vectors * b.vectors.adjoint() - CMatrix::Identity(d_, d_);
    worst = std::max(worst, s.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<std::vector<std::string>> MubSet::stabilizer_check() const {
  std::vector<PauliOperator> candidates;
  if (d_ == 4) {
    const std::string letters = "IXYZ";
    for (char l : letters)
      for (char r : letters) candidates.push_back(pauli_word(std::string{l, r}));
  } else {
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b) candidates.push_back(generalized_pauli(d_, a, b));
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& basis : bases_) {
    std::vector<std::string> labels;
    for (const auto& cand : candidates) {
      CMatrix m = basis.vectors.adjoint() * cand.matrix * basis.vectors;
      double offdiag = 0;
      for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c)
          if (r != c) offdiag += std::norm(m(r, c));
      if (std::sqrt(offdiag) <= kDiagTol) labels.push_back(cand.label);
    }
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace dwf
