#include "doctest.h"
#include "dwf/gf.hpp"

#include <stdexcept>
#include <vector>

using namespace dwf;

namespace {

// Independent oracle for field multiplication: schoolbook polynomial product
// followed by long division by the modulus, all over Z_p.
std::vector<int> poly_mul_mod_oracle(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& modulus, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // long division: modulus is monic of degree n
  const int n = static_cast<int>(modulus.size()) - 1;
  for (int deg = static_cast<int>(prod.size()) - 1; deg >= n; --deg) {
    int q = prod[deg] % p;
    if (q == 0) continue;
    for (int i = 0; i <= n; ++i) {
      int idx = deg - n + i;
      prod[idx] = ((prod[idx] - q * modulus[i]) % p + p) % p;
    }
  }
  prod.resize(n);
  return prod;
}

const std::vector<int> kSupported = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("addition examples") {
  Field f2 = Field::of_order(2);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());

  Field f3 = Field::of_order(3);
  CHECK(f3.index(f3.add(f3.element(2), f3.element(2))) == 1);

  Field f4 = Field::of_order(4);
  GfElement x = f4.element(2), x1 = f4.element(3);
  CHECK(f4.add(x, x1) == f4.one());
}

TEST_CASE("multiplication examples and oracle") {
  Field f3 = Field::of_order(3);
  CHECK(f3.index(f3.mul(f3.element(2), f3.element(2))) == 1);

  Field f4 = Field::of_order(4);
  GfElement x = f4.element(2);
  GfElement xsq = f4.mul(x, x);
  CHECK(xsq == f4.element(3));  // x^2 = x + 1 mod x^2+x+1
  // against the long-division oracle
  auto oracle = poly_mul_mod_oracle(x.coeffs, x.coeffs, f4.modulus(), 2);
  CHECK(xsq.coeffs == oracle);

  for (int d : kSupported) {
    Field f = Field::of_order(d);
    for (const auto& a : f.elements()) CHECK(f.mul(a, f.one()) == a);
  }
}

TEST_CASE("multiplication matches oracle exhaustively on extension fields") {
  for (int d : {4, 8, 9}) {
    Field f = Field::of_order(d);
    for (const auto& a : f.elements()) {
      for (const auto& b : f.elements()) {
        auto expect = poly_mul_mod_oracle(a.coeffs, b.coeffs, f.modulus(), f.p());
        CHECK(f.mul(a, b).coeffs == expect);
      }
    }
  }
}

TEST_CASE("inverse examples") {
  Field f3 = Field::of_order(3);
  CHECK(f3.index(f3.inv(f3.element(2))) == 2);

  Field f4 = Field::of_order(4);
  CHECK(f4.inv(f4.element(2)) == f4.element(3));  // x * (x+1) = x^2 + x = 1
  CHECK(f4.mul(f4.element(2), f4.element(3)) == f4.one());

  Field f5 = Field::of_order(5);
  CHECK(f5.index(f5.inv(f5.element(3))) == 2);

  CHECK_THROWS_AS((void)f3.inv(f3.zero()), std::domain_error);
}

TEST_CASE("element order is canonical") {
  Field f2 = Field::of_order(2);
  CHECK(f2.elements().size() == 2);
  CHECK(f2.elements()[0] == f2.zero());
  CHECK(f2.elements()[1] == f2.one());

  Field f4 = Field::of_order(4);
  auto elems = f4.elements();
  CHECK(f4.to_string(elems[0]) == "0");
  CHECK(f4.to_string(elems[1]) == "1");
  CHECK(f4.to_string(elems[2]) == "x");
  CHECK(f4.to_string(elems[3]) == "x+1");
  for (int k = 0; k < 4; ++k) CHECK(f4.index(elems[k]) == k);

  Field f3 = Field::of_order(3);
  CHECK(f3.elements().size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(f3.index(f3.elements()[k]) == k);
}

TEST_CASE("field axioms hold exhaustively") {
  for (int d : kSupported) {
    CAPTURE(d);
    Field f = Field::of_order(d);
    auto es = f.elements();
    for (const auto& a : es) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      // additive inverse exists
      bool has_neg = false;
      for (const auto& b : es)
        if (f.add(a, b) == f.zero()) has_neg = true;
      CHECK(has_neg);
      for (const auto& b : es) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (const auto& c : es) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group and inverse involution") {
  for (int d : kSupported) {
    CAPTURE(d);
    Field f = Field::of_order(d);
    for (const auto& a : f.elements()) {
      if (f.is_zero(a)) continue;
      CHECK(f.pow(a, d - 1) == f.one());
      CHECK(f.inv(f.inv(a)) == a);
      CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("foreign elements and unsupported orders are rejected") {
  Field f2 = Field::of_order(2);
  Field f3 = Field::of_order(3);
  CHECK_THROWS_AS((void)f2.add(f2.one(), f3.element(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)f2.add(f2.one(), Field::of_order(4).element(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)Field::of_order(6), std::invalid_argument);
  // reducible modulus: x^2 + 1 has root 1 over Z_2
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field(4, 1, {}), std::invalid_argument);  // 4 not prime
}
