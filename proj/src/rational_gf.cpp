#include "nbdom/rational_gf.hpp"

#include <sstream>
#include <stdexcept>

namespace nbdom::poly {

UniRational reduce(const UniRational& f) {
  if (f.den.is_zero()) throw std::domain_error("zero denominator");
  if (f.num.is_zero()) return {UniPoly{}, UniPoly{1}};
  const UniPoly g = gcd(f.num, f.den);
  UniRational r{exact_div(f.num, g), exact_div(f.den, g)};
  const Integer k = integer_gcd(content(r.num), content(r.den));
  if (k != 1) {
    r.num = r.num.divided(k);
    r.den = r.den.divided(k);
  }
  const int s = sgn(r.den[0]) != 0 ? sgn(r.den[0]) : sgn(r.den.lead());
  if (s < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

std::vector<Integer> series(const UniRational& f, int n) {
  const Integer& d0 = f.den[0];
  if (d0 != 1 && d0 != -1) throw std::domain_error("series needs den(0) = +-1");
  std::vector<Integer> out(static_cast<std::size_t>(std::max(n, 0)));
  for (int r = 0; r < n; ++r) {
    Integer acc = f.num[static_cast<std::size_t>(r)];
    for (int i = 1; i <= r && i <= f.den.degree(); ++i) {
      acc -= f.den[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(r - i)];
    }
    out[static_cast<std::size_t>(r)] = d0 == 1 ? acc : Integer(-acc);
  }
  return out;
}

UniPoly one_minus_x_power(int k) {
  UniPoly base(std::vector<Integer>{1, -1});
  UniPoly r(1);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

std::optional<int> one_minus_x_exponent(const UniRational& f) {
  const UniRational r = reduce(f);
  const int k = r.den.degree();
  if (k < 0) return std::nullopt;
  if (r.den == one_minus_x_power(k)) return k;
  return std::nullopt;
}

std::string describe(const UniRational& f) {
  const UniRational r = reduce(f);
  if (r.num.is_zero()) return "0";
  std::ostringstream os;
  const std::size_t v = r.num.valuation();
  UniPoly rest = UniPoly(std::vector<Integer>(r.num.coeffs().begin() + static_cast<std::ptrdiff_t>(v),
                                              r.num.coeffs().end()));
  const bool has_den = r.den != UniPoly(1);
  std::string num_text = to_string(rest);
  if (v > 0) {
    os << "x";
    if (v > 1) os << '^' << v;
    if (rest != UniPoly(1)) os << "*(" << num_text << ')';
  } else if (has_den && rest.size() > 1) {
    os << '(' << num_text << ')';
  } else {
    os << num_text;
  }
  if (!has_den) return os.str();
  os << '/';
  if (auto k = one_minus_x_exponent(r)) {
    os << "(1 - x)";
    if (*k > 1) os << '^' << *k;
  } else {
    os << '(' << to_string(r.den) << ')';
  }
  return os.str();
}

RationalGF::RationalGF(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("generating function with zero denominator");
}

bool RationalGF::is_normalized() const {
  return num_.constant_term() == 1 && den_.constant_term() == 1;
}

bool RationalGF::same_function(const RationalGF& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

namespace {

RationalGF fix_sign(BiPoly num, BiPoly den) {
  const Integer d0 = den.constant_term();
  int s = sgn(d0);
  if (s == 0) s = sgn(den.terms().back().coeff);
  if (s < 0) {
    num = -num;
    den = -den;
  }
  return RationalGF(std::move(num), std::move(den));
}

}  // namespace

RationalGF reduce_content(const RationalGF& f) {
  BiPoly num = f.num();
  BiPoly den = f.den();
  const Integer k = integer_gcd(num.content(), den.content());
  if (k > 1) {
    num = num.divided(k);
    den = den.divided(k);
  }
  return fix_sign(std::move(num), std::move(den));
}

RationalGF reduce(const RationalGF& f) {
  if (f.num().is_zero()) return RationalGF(BiPoly{}, BiPoly{1});
  const BiPoly g = gcd(f.num(), f.den());
  if (g == BiPoly(1)) return reduce_content(f);
  return reduce_content(RationalGF(divide_exact(f.num(), g), divide_exact(f.den(), g)));
}

std::vector<UniPoly> series_x(const RationalGF& f, int r_max) {
  if (sgn(f.den().constant_term()) == 0) throw std::domain_error("den(0,0) = 0: no power series in x");
  if (r_max < 0) return {};
  const std::vector<UniPoly> q = f.den().as_poly_in_x();
  const std::vector<UniPoly> n = f.num().as_poly_in_x();
  const UniPoly& q0 = q[0];
  const bool unit = q0.degree() == 0 && (q0[0] == 1 || q0[0] == -1);
  std::vector<UniPoly> h;
  h.reserve(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) {
    UniPoly acc = static_cast<std::size_t>(r) < n.size() ? n[static_cast<std::size_t>(r)] : UniPoly{};
    for (int i = 1; i <= r && static_cast<std::size_t>(i) < q.size(); ++i) {
      const UniPoly& qi = q[static_cast<std::size_t>(i)];
      if (qi.is_zero()) continue;
      acc -= qi * h[static_cast<std::size_t>(r - i)];
    }
    if (unit) {
      h.push_back(q0[0] == 1 ? std::move(acc) : -acc);
    } else {
      h.push_back(exact_div(acc, q0));
    }
  }
  return h;
}

std::vector<UniRational> series_y(const RationalGF& f, int d_max) {
  const std::vector<UniPoly> q = f.den().as_poly_in_y();
  const std::vector<UniPoly> n = f.num().as_poly_in_y();
  if (q.empty() || q[0].is_zero()) throw std::domain_error("den(x, 0) vanishes: no power series in y");
  const UniPoly& q0 = q[0];
  // h_d = a_d / q0^(d+1), a_d = n_d q0^d - sum_j q_j a_(d-j) q0^(j-1)
  std::vector<UniPoly> q0_pow{UniPoly(1)};
  std::vector<UniPoly> a;
  std::vector<UniRational> out;
  for (int d = 0; d <= d_max; ++d) {
    q0_pow.push_back(q0_pow.back() * q0);
    UniPoly acc = static_cast<std::size_t>(d) < n.size() ? n[static_cast<std::size_t>(d)] * q0_pow[static_cast<std::size_t>(d)]
                                                         : UniPoly{};
    for (int j = 1; j <= d && static_cast<std::size_t>(j) < q.size(); ++j) {
      const UniPoly& qj = q[static_cast<std::size_t>(j)];
      if (qj.is_zero()) continue;
      acc -= qj * a[static_cast<std::size_t>(d - j)] * q0_pow[static_cast<std::size_t>(j - 1)];
    }
    a.push_back(acc);
    out.push_back(reduce(UniRational{std::move(acc), q0_pow[static_cast<std::size_t>(d) + 1]}));
  }
  return out;
}

UniRational specialize_y(const RationalGF& f, const Rational& value) {
  const Integer p = value.get_num();
  const Integer s = value.get_den();
  const int top = std::max(f.num().degree_y(), f.den().degree_y());
  // Multiply through by s^top so everything stays integral.
  auto substitute = [&](const BiPoly& poly) {
    const std::vector<UniPoly> cols = poly.as_poly_in_y();
    UniPoly acc;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].is_zero()) continue;
      Integer k;
      mpz_pow_ui(k.get_mpz_t(), p.get_mpz_t(), j);
      Integer sk;
      mpz_pow_ui(sk.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(top) - j);
      acc += cols[j].scaled(k * sk);
    }
    return acc;
  };
  UniRational r{substitute(f.num()), substitute(f.den())};
  if (r.den.is_zero() || sgn(r.den[0]) == 0) {
    throw std::domain_error("denominator degenerates at y = " + value.get_str());
  }
  return reduce(r);
}

}  // namespace nbdom::poly
