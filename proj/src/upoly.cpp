#include "nbdom/upoly.hpp"

#include <sstream>

namespace nbdom {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Integer binomial(long n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), k);
  return r;
}

namespace poly {

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& c = p[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Rational evaluate(const UniPoly& p, const Rational& at) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * at + Rational(p[i]);
  return acc;
}

}  // namespace poly
}  // namespace nbdom
