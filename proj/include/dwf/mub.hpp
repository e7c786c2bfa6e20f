// Mutually unbiased bases as eigenbases of generalized Pauli operators.
//
// For prime d (2, 3, 5, 7): basis 0 is the computational (Z eigen-) basis;
// basis k+1 is the eigenbasis of X Z^k, k = 0..d-1. Eigenvectors are ordered
// by eigenvalue phase and scaled so the first nonzero amplitude is real
// positive; with lambda_m = eta * omega^m (eta = i^k for d = 2, eta = 1 for
// odd d) the amplitudes have the closed form
//     <j | v_m> = omega^{k j(j-1)/2} lambda_m^{-j} / sqrt(d),
// which makes orthonormality and unbiasedness exact up to rounding.
//
// For d = 4: the five common eigenbases of the commuting two-qubit Pauli
// triples {ZI,IZ,ZZ}, {XI,IX,XX}, {YI,IY,YY}, {XY,YZ,ZX}, {XZ,YX,ZY},
// ordered within each basis by the eigenvalue pair of the first two
// operators: (+,+), (+,-), (-,+), (-,-).

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace dwf {

using Cx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct PauliOperator {
  std::string label;
  CMatrix matrix;
};

// Prime d: X^a Z^b with X|k> = |k+1 mod d>, Z|k> = omega^k |k>, omega = exp(2 pi i / d).
PauliOperator generalized_pauli(int d, int a, int b);
// d = 4: two-letter word over {I,X,Y,Z}, left letter = first qubit.
PauliOperator pauli_word(const std::string& word);
// Pretty label for X^a Z^b, e.g. "I", "X", "Z^2", "X Z".
std::string pauli_label(int a, int b);

struct Basis {
  int index = 0;    // 0..d
  CMatrix vectors;  // d x d, column j = |alpha_{i,j}>
};

// max over i != k, j, l of | |<a_ij|a_kl>|^2 - 1/d |
double max_unbiased_deviation(const std::vector<Basis>& bases, int d);
// max over i, j, l of | |<a_ij|a_il>|^2 - delta_jl |
double max_orthonormal_deviation(const std::vector<Basis>& bases, int d);

class MubSet {
 public:
  // Supported d: 2, 3, 4, 5, 7.
  static MubSet build(int d);
  static bool supported(int d);

  int d() const { return d_; }
  const std::vector<Basis>& bases() const { return bases_; }
  const CMatrix& basis_vectors(int i) const { return bases_.at(i).vectors; }

  // max over i != k, j, l of | |<a_ij|a_kl>|^2 - 1/d |
  double check_unbiased() const;
  // max over i, j, l of | |<a_ij|a_il>|^2 - delta_jl |
  double check_orthonormal() const;
  // max over i of || sum_j |a_ij><a_ij| - I ||_max
  double check_completeness() const;

  // Per basis, the Pauli labels diagonal in that basis (off-diagonal norm
  // <= 1e-9). Candidates: the d^2 operators X^a Z^b for prime d, the 16
  // two-letter words for d = 4. Each basis of a canonical set yields
  // exactly d labels, identity included.
  std::vector<std::vector<std::string>> stabilizer_check() const;

 private:
  int d_ = 0;
  std::vector<Basis> bases_;
};

}  // namespace dwf
