#include "doctest.h"
#include "dwf/mub.hpp"

#include <algorithm>
#include <numbers>

using namespace dwf;

namespace {

bool matrices_close(const CMatrix& a, const CMatrix& b, double tol = 1e-12) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

// smallest max-norm distance to c * b over unit phases c
double up_to_phase_distance(const CMatrix& a, const CMatrix& b) {
  // align on the largest entry of b
  int rr = 0, cc = 0;
  double best = 0;
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (std::abs(b(r, c)) > best) { best = std::abs(b(r, c)); rr = r; cc = c; }
  Cx phase = a(rr, cc) / b(rr, cc);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("generalized Pauli matrices") {
  CMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  CHECK(matrices_close(generalized_pauli(2, 1, 0).matrix, sx));

  const Cx w = std::polar(1.0, 2 * std::numbers::pi / 3);
  CMatrix z3 = CMatrix::Zero(3, 3);
  z3(0, 0) = 1;
  z3(1, 1) = w;
  z3(2, 2) = w * w;
  CHECK(matrices_close(generalized_pauli(3, 0, 1).matrix, z3));

  // commutation up to phase: Z X = omega X Z
  CMatrix xz = generalized_pauli(3, 1, 0).matrix * generalized_pauli(3, 0, 1).matrix;
  CMatrix zx = generalized_pauli(3, 0, 1).matrix * generalized_pauli(3, 1, 0).matrix;
  CHECK(matrices_close(zx, w * xz));

  CHECK_THROWS_AS(generalized_pauli(4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(pauli_word("XYZ"), std::invalid_argument);
}

TEST_CASE("qubit set is the sigma_z, sigma_x, sigma_y eigenbases") {
  MubSet m = MubSet::build(2);
  REQUIRE(m.bases().size() == 3);
  CHECK(matrices_close(m.basis_vectors(0), CMatrix::Identity(2, 2)));

  const double s = 1 / std::sqrt(2.0);
  CMatrix xb(2, 2);
  xb << s, s, s, -s;
  CHECK(matrices_close(m.basis_vectors(1), xb, 1e-14));

  CMatrix yb(2, 2);  // XZ eigenvectors, eigenvalue i then -i
  yb << Cx(s, 0), Cx(s, 0), Cx(0, -s), Cx(0, s);
  CHECK(matrices_close(m.basis_vectors(2), yb, 1e-14));
}

TEST_CASE("each prime-d basis diagonalizes its X Z^k") {
  for (int d : {2, 3, 5, 7}) {
    CAPTURE(d);
    MubSet m = MubSet::build(d);
    for (int k = 0; k < d; ++k) {
      const CMatrix& v = m.basis_vectors(k + 1);
      CMatrix p = generalized_pauli(d, 1, k).matrix;
      CMatrix g = v.adjoint() * p * v;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (r != c) CHECK(std::abs(g(r, c)) < 1e-12);
      // first nonzero amplitude real positive
      for (int c = 0; c < d; ++c) {
        CHECK(v(0, c).real() > 0);
        CHECK(std::abs(v(0, c).imag()) < 1e-13);
      }
    }
  }
}

TEST_CASE("unbiasedness and orthonormality for all supported d") {
  CHECK(MubSet::build(2).check_unbiased() <= 1e-12);
  CHECK(MubSet::build(5).check_unbiased() <= 1e-10);
  CHECK(MubSet::build(3).check_orthonormal() <= 1e-12);
  for (int d : {2, 3, 4, 5, 7}) {
    CAPTURE(d);
    MubSet m = MubSet::build(d);
    CHECK(static_cast<int>(m.bases().size()) == d + 1);
    CHECK(m.check_unbiased() <= 1e-10);
    CHECK(m.check_orthonormal() <= 1e-10);
    CHECK(m.check_completeness() <= 1e-10);
  }
  CHECK_THROWS_AS(MubSet::build(6), std::invalid_argument);
  CHECK_THROWS_AS(MubSet::build(9), std::invalid_argument);
}

TEST_CASE("corrupted sets show large deviations") {
  MubSet m = MubSet::build(3);
  std::vector<Basis> repeated = {m.bases()[0], m.bases()[0]};
  CHECK(max_unbiased_deviation(repeated, 3) == doctest::Approx(1 - 1.0 / 3).epsilon(1e-9));

  CHECK(max_orthonormal_deviation({Basis{0, CMatrix::Identity(3, 3)}}, 3) == 0);

  Basis dup{0, m.bases()[1].vectors};
  dup.vectors.col(1) = dup.vectors.col(0);
  CHECK(max_orthonormal_deviation({dup}, 3) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("two-qubit commuting triples partition correctly") {
  const std::vector<std::vector<std::string>> triples = {
      {"ZI", "IZ", "ZZ"}, {"XI", "IX", "XX"}, {"YI", "IY", "YY"},
      {"XY", "YZ", "ZX"}, {"XZ", "YX", "ZY"}};
  for (const auto& t : triples) {
    CMatrix a = pauli_word(t[0]).matrix, b = pauli_word(t[1]).matrix, c = pauli_word(t[2]).matrix;
    CHECK(matrices_close(a * b, b * a, 1e-12));
    CHECK(matrices_close(a * c, c * a, 1e-12));
    CHECK(matrices_close(b * c, c * b, 1e-12));
    CHECK(up_to_phase_distance(a * b, c) < 1e-12);  // product lies in the triple up to phase
  }
  // the 15 non-identity words are covered exactly once
  std::vector<std::string> seen;
  for (const auto& t : triples)
    for (const auto& w : t) seen.push_back(w);
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.size() == 15);
}

TEST_CASE("stabilizer labels per basis") {
  auto labels2 = MubSet::build(2).stabilizer_check();
  REQUIRE(labels2.size() == 3);
  CHECK(labels2[0] == std::vector<std::string>{"I", "Z"});

  auto labels3 = MubSet::build(3).stabilizer_check();
  CHECK(labels3[1] == std::vector<std::string>{"I", "X", "X^2"});  // basis of X Z^0

  auto labels4 = MubSet::build(4).stabilizer_check();
  CHECK(labels4[0] == std::vector<std::string>{"II", "IZ", "ZI", "ZZ"});

  for (int d : {2, 3, 4, 5, 7}) {
    CAPTURE(d);
    auto labels = MubSet::build(d).stabilizer_check();
    for (const auto& per_basis : labels) {
      CHECK(static_cast<int>(per_basis.size()) == d);
      CHECK(std::find(per_basis.begin(), per_basis.end(),
                      d == 4 ? std::string("II") : std::string("I")) != per_basis.end());
    }
  }
}
