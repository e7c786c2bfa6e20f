// Exact arithmetic in GF(p^n) for the dimensions used by the phase-space
// construction: d = p^n in {2,3,4,5,7,8,9}.
//
// Elements are coefficient vectors of length n over Z_p, constant term first.
// The canonical order of the d elements is by integer value sum_i c_i p^i,
// zero first; the resulting index 0..d-1 labels striations and lines
// everywhere downstream.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dwf {

struct GfElement {
  std::vector<int> coeffs;  // length n, entries in 0..p-1, constant term first

  bool operator==(const GfElement&) const = default;
};

class Field {
 public:
  // modulus: monic irreducible over Z_p, coefficient list of length n+1,
  // constant term first. Ignored (may be empty) when n = 1.
  Field(int p, int n, std::vector<int> modulus = {});

  // The fixed field for a supported dimension d in {2,3,4,5,7,8,9}, with the
  // project-wide moduli GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1.
  static Field of_order(int d);
  static bool supported_order(int d);

  int p() const { return p_; }
  int n() const { return n_; }
  int order() const { return d_; }
  const std::vector<int>& modulus() const { return modulus_; }

  GfElement zero() const;
  GfElement one() const;
  // Element with canonical index k (base-p digits of k, little-endian).
  GfElement element(int k) const;
  // Canonical index of a, the inverse of element().
  int index(const GfElement& a) const;
  // All d elements in canonical order.
  std::vector<GfElement> elements() const;

  GfElement add(const GfElement& a, const GfElement& b) const;
  GfElement sub(const GfElement& a, const GfElement& b) const;
  GfElement mul(const GfElement& a, const GfElement& b) const;
  // a^(d-2) by square-and-multiply; throws on zero input.
  GfElement inv(const GfElement& a) const;
  GfElement pow(const GfElement& a, long long e) const;

  bool is_zero(const GfElement& a) const;
  // Human-readable polynomial form, e.g. "0", "1", "x", "x+1".
  std::string to_string(const GfElement& a) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

 private:
  void check_element(const GfElement& a) const;

  int p_, n_, d_;
  std::vector<int> modulus_;
};

}  // namespace dwf
