#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nbdom {

/// Arbitrary-precision signed integer used for every count and coefficient.
using Integer = mpz_class;
/// Exact rational number.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses a decimal integer with optional leading sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer integer_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer binomial(long n, unsigned long k);

}  // namespace nbdom
