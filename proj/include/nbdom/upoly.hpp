#pragma once

// Dense univariate polynomials over an exact coefficient ring, with a
// subresultant polynomial remainder sequence GCD. Instantiated as Z[t]
// (coefficients Integer) and Z[x][t] (coefficients UniPoly).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nbdom/bigint.hpp"

namespace nbdom::poly {

// Ring hooks for Integer coefficients. Polynomial coefficients get the same
// hooks further down.
inline bool ring_is_zero(const Integer& a) { return sgn(a) == 0; }
inline int ring_sign(const Integer& a) { return sgn(a); }
inline Integer ring_gcd(const Integer& a, const Integer& b) { return integer_gcd(a, b); }
inline Integer ring_exact_div(const Integer& a, const Integer& b) {
  if (!divides(b, a)) throw std::domain_error("inexact integer division");
  return exact_quotient(a, b);
}

template <class C>
class Dense {
 public:
  using Coeff = C;

  Dense() = default;
  Dense(C constant) {
    if (!ring_is_zero(constant)) c_.push_back(std::move(constant));
  }
  Dense(int constant) : Dense(C(constant)) {}
  explicit Dense(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Dense monomial(C coeff, std::size_t k) {
    if (ring_is_zero(coeff)) return {};
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(coeff);
    return Dense(std::move(v));
  }

  /// Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  const C& operator[](std::size_t i) const {
    static const C kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const C& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<C>& coeffs() const { return c_; }

  /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!ring_is_zero(c_[i])) return i;
    }
    return 0;
  }

  Dense& operator+=(const Dense& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Dense& operator-=(const Dense& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Dense& operator*=(const Dense& o) { return *this = *this * o; }

  friend Dense operator+(Dense a, const Dense& b) { return a += b; }
  friend Dense operator-(Dense a, const Dense& b) { return a -= b; }
  friend Dense operator-(Dense a) {
    for (C& v : a.c_) v = -v;
    return a;
  }
  friend Dense operator*(const Dense& a, const Dense& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Dense(std::move(out));
  }
  friend bool operator==(const Dense& a, const Dense& b) { return a.c_ == b.c_; }

  Dense scaled(const C& k) const {
    if (ring_is_zero(k)) return {};
    Dense r = *this;
    for (C& v : r.c_) v = v * k;
    r.trim();
    return r;
  }
  Dense divided(const C& k) const {
    Dense r = *this;
    for (C& v : r.c_) v = ring_exact_div(v, k);
    return r;
  }
  /// Multiplies by t^k.
  Dense shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> v(k, C(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Dense(std::move(v));
  }
  /// Keeps the coefficients of t^0 .. t^(n-1).
  Dense truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Dense(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  template <class V>
  V evaluate(const V& at) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + V(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

/// Z[x]
using UniPoly = Dense<Integer>;

template <class C>
bool ring_is_zero(const Dense<C>& a) {
  return a.is_zero();
}
template <class C>
int ring_sign(const Dense<C>& a) {
  return a.is_zero() ? 0 : ring_sign(a.lead());
}

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
template <class C>
Dense<C> exact_div(const Dense<C>& a, const Dense<C>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<C> rem = a.coeffs();
  const int db = b.degree();
  std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1), C(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    C& top = rem[static_cast<std::size_t>(k + db)];
    if (ring_is_zero(top)) continue;
    C f = ring_exact_div(top, b.lead());
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (const C& v : rem) {
    if (!ring_is_zero(v)) throw std::domain_error("inexact polynomial division");
  }
  return Dense<C>(std::move(q));
}

template <class C>
Dense<C> ring_exact_div(const Dense<C>& a, const Dense<C>& b) {
  return exact_div(a, b);
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
Dense<C> pseudo_remainder(const Dense<C>& a, const Dense<C>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<C> rem = a.coeffs();
  const int db = b.degree();
  const C& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const C top = rem[static_cast<std::size_t>(k)];
    for (C& v : rem) v = v * lb;
    if (!ring_is_zero(top)) {
      for (int i = 0; i <= db; ++i) {
        rem[static_cast<std::size_t>(k - db + i)] -= top * b[static_cast<std::size_t>(i)];
      }
    }
    rem.pop_back();
  }
  return Dense<C>(std::move(rem));
}

/// Positive-leading representative of the gcd of the coefficients.
template <class C>
C content(const Dense<C>& a) {
  C g(0);
  for (const C& v : a.coeffs()) {
    g = ring_gcd(g, v);
    if (g == C(1)) break;
  }
  if (ring_sign(g) < 0) g = -g;
  return g;
}

template <class C>
Dense<C> primitive_part(const Dense<C>& a) {
  if (a.is_zero()) return a;
  const C g = content(a);
  Dense<C> p = a.divided(g);
  return ring_sign(p.lead()) < 0 ? -p : p;
}

template <class C>
C ring_power(const C& base, int e) {
  C r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

/// GCD with positive leading coefficient (Collins-Brown subresultant PRS).
template <class C>
Dense<C> gcd(const Dense<C>& a_in, const Dense<C>& b_in) {
  if (a_in.is_zero()) return primitive_part(b_in).scaled(content(b_in));
  if (b_in.is_zero()) return primitive_part(a_in).scaled(content(a_in));
  const C ca = content(a_in);
  const C cb = content(b_in);
  C cg = ring_gcd(ca, cb);
  if (ring_sign(cg) < 0) cg = -cg;
  Dense<C> a = a_in.divided(ca);
  Dense<C> b = b_in.divided(cb);
  if (a.degree() < b.degree()) std::swap(a, b);
  C g(1);
  C h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    Dense<C> r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return Dense<C>(cg);
    a = std::move(b);
    b = r.divided(g * ring_power(h, delta));
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else {
      h = ring_exact_div(ring_power(g, delta), ring_power(h, delta - 1));
    }
  }
  return primitive_part(b).scaled(cg);
}

template <class C>
Dense<C> ring_gcd(const Dense<C>& a, const Dense<C>& b) {
  return gcd(a, b);
}

/// Text form in ascending powers, e.g. "1 - 2*x + x^3".
std::string to_string(const UniPoly& p, std::string_view var = "x");

/// Exact rational value at a rational point.
Rational evaluate(const UniPoly& p, const Rational& at);

}  // namespace nbdom::poly
