// Exact arithmetic primitives shared by the polytope-side modules.
//
// Rational is kept in canonical form (gcd 1, positive denominator) by the
// GMP backend after every operation; Int is an arbitrary-precision integer.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace dwf {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<Int>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "a/b", or just "a" when b = 1.
std::string to_frac_string(const Rational& q);

// Parses "a", "a/b", or a plain integer with optional sign. Throws on malformed input.
Rational parse_frac(const std::string& s);

// Best rational approximation to x with denominator <= max_den, by the
// continued-fraction / semiconvergent construction. Exact for representable x.
Rational rationalize(double x, const Int& max_den);

}  // namespace dwf
