#pragma once

// Rational functions over Z: univariate slices in x and the bivariate
// generating functions num(x, y) / den(x, y).

#include <optional>
#include <string>
#include <vector>

#include "nbdom/bigint.hpp"
#include "nbdom/bipoly.hpp"
#include "nbdom/upoly.hpp"

namespace nbdom::poly {

/// num(x) / den(x) with integer polynomials.
struct UniRational {
  UniPoly num;
  UniPoly den{1};

  /// Equal as rational functions (cross-multiplication).
  bool same_function(const UniRational& o) const { return num * o.den == o.num * den; }
  friend bool operator==(const UniRational&, const UniRational&) = default;
};

/// Cancels the gcd and integer content; den(0) > 0 when den(0) != 0, else lead(den) > 0.
UniRational reduce(const UniRational& f);

/// Power-series coefficients of x^0..x^(n-1); requires den(0) = +-1.
std::vector<Integer> series(const UniRational& f, int n);

/// (1 - x)^k
UniPoly one_minus_x_power(int k);

/// If den is (1 - x)^k (after reduction), returns k.
std::optional<int> one_minus_x_exponent(const UniRational& f);

/// Readable form such as "x^3*(1 + 6*x + 2*x^2)/(1 - x)^3".
std::string describe(const UniRational& f);

class RationalGF {
 public:
  RationalGF() : den_(1) {}
  /// Throws std::invalid_argument if den is zero.
  RationalGF(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  /// alpha_00 = beta_00 = +1.
  bool is_normalized() const;
  /// Equal as rational functions (cross-multiplication identity).
  bool same_function(const RationalGF& o) const;
  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  BiPoly num_;
  BiPoly den_;
};

/// Cancels the polynomial gcd and integer content, then makes den(0,0) > 0.
RationalGF reduce(const RationalGF& f);
/// Only removes the common integer content and fixes the sign.
RationalGF reduce_content(const RationalGF& f);

/// Coefficients of x^0..x^r_max, each a polynomial in y. Throws
/// std::domain_error if den(0,0) = 0 or a coefficient is not integral.
std::vector<UniPoly> series_x(const RationalGF& f, int r_max);

/// [y^d] f as reduced rational functions in x, d = 0..d_max. Throws
/// std::domain_error if den(x, 0) is the zero polynomial.
std::vector<UniRational> series_y(const RationalGF& f, int d_max);

/// f(x, value), reduced. Throws std::domain_error if the substituted
/// denominator vanishes at x = 0.
UniRational specialize_y(const RationalGF& f, const Rational& value);

}  // namespace nbdom::poly
