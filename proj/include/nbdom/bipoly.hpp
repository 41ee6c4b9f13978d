#pragma once

// Sparse bivariate polynomials in x and y with Integer coefficients.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nbdom/bigint.hpp"
#include "nbdom/upoly.hpp"

namespace nbdom::poly {

struct Term {
  std::uint32_t i = 0;  // exponent of x
  std::uint32_t j = 0;  // exponent of y
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms are kept sorted by (i, j) with no zero coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Integer& constant);
  BiPoly(long constant) : BiPoly(Integer(constant)) {}
  BiPoly(int constant) : BiPoly(Integer(constant)) {}

  static BiPoly monomial(const Integer& coeff, std::uint32_t i, std::uint32_t j);
  /// Sorts, merges duplicates and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(std::uint32_t i, std::uint32_t j) const;
  Integer constant_term() const { return coeff(0, 0); }
  /// -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;
  /// Largest |coefficient| bit length.
  std::size_t max_bits() const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly scaled(const Integer& k) const;
  /// Divides every coefficient by k; throws if some coefficient is not a multiple.
  BiPoly divided(const Integer& k) const;
  /// Multiplies by x^i y^j.
  BiPoly shifted(std::uint32_t i, std::uint32_t j) const;
  /// Divides by x^i y^j; throws if some term has smaller exponents.
  BiPoly unshifted(std::uint32_t i, std::uint32_t j) const;
  /// Drops all terms with x-exponent >= n.
  BiPoly truncated_x(std::uint32_t n) const;

  /// Coefficient of x^i as a polynomial in y.
  UniPoly coeff_of_x(std::uint32_t i) const;
  /// Coefficient of y^j as a polynomial in x.
  UniPoly coeff_of_y(std::uint32_t j) const;
  /// Index i holds the coefficient of x^i (a polynomial in y).
  std::vector<UniPoly> as_poly_in_x() const;
  /// Index j holds the coefficient of y^j (a polynomial in x).
  std::vector<UniPoly> as_poly_in_y() const;
  static BiPoly from_poly_in_x(const std::vector<UniPoly>& coeffs);
  static BiPoly from_poly_in_y(const std::vector<UniPoly>& coeffs);

  /// p(x, value) as a polynomial in x.
  UniPoly at_y(const Integer& value) const;
  Integer evaluate(const Integer& x, const Integer& y) const;

  /// Ascending i then j, e.g. "1 - x - x^3*y".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient; throws std::domain_error if b does not divide a.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

/// Greatest common divisor with positive leading coefficient, computed in
/// Z[x][y] by the subresultant PRS.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Parses the canonical text form (also accepts unordered terms and spaces),
/// e.g. "1 + x^2*y - 3*x*y^2". Throws std::invalid_argument.
BiPoly parse_bipoly(const std::string& text);

}  // namespace nbdom::poly
