#include "dwf/gf.hpp"

#include <stdexcept>

namespace dwf {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Evaluate a polynomial (constant term first) at x over Z_p.
int eval_mod(const std::vector<int>& poly, int x, int p) {
  int acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

}  // namespace

Field::Field(int p, int n, std::vector<int> modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (n_ < 1) throw std::invalid_argument("extension degree must be >= 1");
  d_ = ipow(p_, n_);
  if (!supported_order(d_))
    throw std::invalid_argument("unsupported dimension " + std::to_string(d_) +
                                " (supported: 2,3,4,5,7,8,9)");
  if (n_ == 1) {
    modulus_ = {0, 1};  // x, unused
    return;
  }
  if (static_cast<int>(modulus_.size()) != n_ + 1 || modulus_[n_] != 1)
    throw std::invalid_argument("modulus must be monic of degree n");
  for (int c : modulus_)
    if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficients must be reduced mod p");
  // Irreducibility for n <= 3: no roots in Z_p suffices (a reducible polynomial
  // of degree 2 or 3 has a linear factor).
  if (n_ > 3) throw std::invalid_argument("extension degrees above 3 are not supported");
  for (int x = 0; x < p_; ++x)
    if (eval_mod(modulus_, x, p_) == 0)
      throw std::invalid_argument("modulus is reducible over Z_p (root found)");
}

Field Field::of_order(int d) {
  switch (d) {
    case 2: return Field(2, 1);
    case 3: return Field(3, 1);
    case 4: return Field(2, 2, {1, 1, 1});  // x^2 + x + 1
    case 5: return Field(5, 1);
    case 7: return Field(7, 1);
    case 8: return Field(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
    case 9: return Field(3, 2, {1, 0, 1});     // x^2 + 1
    default: throw std::invalid_argument("unsupported dimension " + std::to_string(d) +
                                         " (supported: 2,3,4,5,7,8,9)");
  }
}

bool Field::supported_order(int d) {
  return d == 2 || d == 3 || d == 4 || d == 5 || d == 7 || d == 8 || d == 9;
}

GfElement Field::zero() const { return GfElement{std::vector<int>(n_, 0)}; }

GfElement Field::one() const {
  auto e = zero();
  e.coeffs[0] = 1;
  return e;
}

GfElement Field::element(int k) const {
  if (k < 0 || k >= d_) throw std::out_of_range("element index out of range");
  auto e = zero();
  for (int i = 0; i < n_; ++i) {
    e.coeffs[i] = k % p_;
    k /= p_;
  }
  return e;
}

int Field::index(const GfElement& a) const {
  check_element(a);
  int k = 0;
  for (int i = n_ - 1; i >= 0; --i) k = k * p_ + a.coeffs[i];
  return k;
}

std::vector<GfElement> Field::elements() const {
  std::vector<GfElement> out;
  out.reserve(d_);
  for (int k = 0; k < d_; ++k) out.push_back(element(k));
  return out;
}

void Field::check_element(const GfElement& a) const {
  if (static_cast<int>(a.coeffs.size()) != n_)
    throw std::invalid_argument("element does not belong to this field (degree mismatch)");
  for (int c : a.coeffs)
    if (c < 0 || c >= p_)
      throw std::invalid_argument("element does not belong to this field (coefficient range)");
}

GfElement Field::add(const GfElement& a, const GfElement& b) const {
  check_element(a);
  check_element(b);
  GfElement r = zero();
  for (int i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

GfElement Field::sub(const GfElement& a, const GfElement& b) const {
  check_element(a);
  check_element(b);
  GfElement r = zero();
  for (int i = 0; i < n_; ++i) r.coeffs[i] = (a.coeffs[i] - b.coeffs[i] + p_) % p_;
  return r;
}

GfElement Field::mul(const GfElement& a, const GfElement& b) const {
  check_element(a);
  check_element(b);
  // polynomial product, then reduction by the monic modulus
  std::vector<int> prod(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
  for (int deg = 2 * n_ - 2; deg >= n_; --deg) {
    int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < n_; ++i)
      prod[deg - n_ + i] = ((prod[deg - n_ + i] - c * modulus_[i]) % p_ + p_) % p_;
  }
  GfElement r = zero();
  for (int i = 0; i < n_; ++i) r.coeffs[i] = prod[i];
  return r;
}

GfElement Field::pow(const GfElement& a, long long e) const {
  check_element(a);
  GfElement base = a, acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

GfElement Field::inv(const GfElement& a) const {
  if (is_zero(a)) throw std::domain_error("no inverse of zero");
  return pow(a, d_ - 2);
}

bool Field::is_zero(const GfElement& a) const {
  check_element(a);
  for (int c : a.coeffs)
    if (c != 0) return false;
  return true;
}

std::string Field::to_string(const GfElement& a) const {
  check_element(a);
  std::string s;
  for (int i = n_ - 1; i >= 0; --i) {
    int c = a.coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c > 1) s += std::to_string(c);
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace dwf
