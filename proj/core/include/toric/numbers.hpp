#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace toric {

// Arbitrary-precision integers and rationals. Rationals are kept canonical
// (lowest terms, positive denominator) by the GMP backend. No floating point
// is used anywhere in this library.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// base^e for integer e of either sign. Throws std::domain_error on 0^negative.
Rat rat_pow(const Rat& base, long e);

// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Floor division (round toward minus infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Extended gcd: g = gcd(a, b) >= 0 with g = s*a + t*b.
struct Xgcd {
  Int g, s, t;
};
Xgcd xgcd(const Int& a, const Int& b);

}  // namespace toric
