#pragma once

// Word-size prime field arithmetic and Chinese remaindering.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nbdom/bigint.hpp"

namespace nbdom::modular {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

/// Reduces a (possibly negative) big integer modulo p.
std::uint64_t reduce(const Integer& v, std::uint64_t p);

/// Distinct primes just below 2^62, largest first.
std::span<const std::uint64_t> primes();

/// Minimal connection polynomial C (C[0] = 1) of a sequence over GF(p):
/// sum_{i=0}^{L} C[i] s[n-i] = 0 for L <= n < s.size(). Returns C with size L + 1.
std::vector<std::uint64_t> berlekamp_massey(std::span<const std::uint64_t> s, std::uint64_t p);

/// Coefficients (low to high) of the polynomial of degree < n through (xs[k], ys[k]).
std::vector<std::uint64_t> interpolate(std::span<const std::uint64_t> xs,
                                       std::span<const std::uint64_t> ys, std::uint64_t p);

/// det(t I - A) over GF(p), coefficients of t^0 .. t^n (the last is 1).
/// Hessenberg reduction followed by the usual three-term recurrence.
std::vector<std::uint64_t> charpoly(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p);

/// Monic gcd over GF(p); coefficients low to high, empty for gcd(0, 0).
std::vector<std::uint64_t> poly_gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                                    std::uint64_t p);

/// Incremental CRT for a vector of residues; values are lifted to the
/// symmetric range (-M/2, M/2].
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t n) : values_(n) {}

  /// Folds in residues modulo `p`; returns true if no lifted value changed.
  bool add(std::span<const std::uint64_t> residues, std::uint64_t p);

  const std::vector<Integer>& values() const { return values_; }
  const Integer& modulus() const { return modulus_; }

 private:
  std::vector<Integer> values_;
  Integer modulus_ = 1;
};

}  // namespace nbdom::modular
