#include "nbdom/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nbdom::poly {

namespace {

bool term_less(const Term& a, const Term& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }

// Row-major (i, j) grid of coefficients used by the multiply and divide kernels.
struct Grid {
  std::size_t rows;  // x-exponents 0..rows-1
  std::size_t cols;  // y-exponents 0..cols-1
  std::vector<Integer> cell;

  Grid(std::size_t r, std::size_t c) : rows(r), cols(c), cell(r * c) {}
  Integer& at(std::size_t i, std::size_t j) { return cell[i * cols + j]; }

  std::vector<Term> collect() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer& v = cell[i * cols + j];
        if (sgn(v) != 0) out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
      }
    }
    return out;
  }
};

}  // namespace

BiPoly::BiPoly(const Integer& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, 0, constant});
}

BiPoly BiPoly::monomial(const Integer& coeff, std::uint32_t i, std::uint32_t j) {
  BiPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({i, j, coeff});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  BiPoly p;
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().i == t.i && p.terms_.back().j == t.j) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
  return p;
}

Integer BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  const Term key{i, j, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->i == i && it->j == j) return it->coeff;
  return 0;
}

int BiPoly::degree_x() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().i); }

int BiPoly::degree_y() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.j));
  return d;
}

std::size_t BiPoly::max_bits() const {
  std::size_t b = 0;
  for (const Term& t : terms_) b = std::max(b, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
  return b;
}

Integer BiPoly::content() const {
  Integer g = 0;
  for (const Term& t : terms_) {
    g = integer_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && term_less(a[p], b[q]))) {
      out.push_back(a[p++]);
    } else if (p == a.size() || term_less(b[q], a[p])) {
      out.push_back(b[q++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Integer v = subtract ? Integer(a[p].coeff - b[q].coeff) : Integer(a[p].coeff + b[q].coeff);
      if (sgn(v) != 0) out.push_back({a[p].i, a[p].j, std::move(v)});
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

BiPoly operator-(BiPoly a) {
  for (Term& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].i, a.terms_[0].j);
  if (b.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].i, b.terms_[0].j);
  const std::size_t rows = static_cast<std::size_t>(a.degree_x() + b.degree_x()) + 1;
  const std::size_t cols = static_cast<std::size_t>(a.degree_y() + b.degree_y()) + 1;
  const std::size_t pairs = a.size() * b.size();
  BiPoly r;
  if (rows * cols <= 4 * pairs + 1024) {
    Grid g(rows, cols);
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        Integer& cell = g.at(s.i + t.i, s.j + t.j);
        mpz_addmul(cell.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      }
    }
    r.terms_ = g.collect();
    return r;
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Integer> acc;
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Integer& cell = acc[{s.i + t.i, s.j + t.j}];
      mpz_addmul(cell.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  for (auto& [k, v] : acc) {
    if (sgn(v) != 0) r.terms_.push_back({k.first, k.second, std::move(v)});
  }
  return r;
}

BiPoly BiPoly::scaled(const Integer& k) const {
  if (sgn(k) == 0) return {};
  BiPoly r = *this;
  for (Term& t : r.terms_) t.coeff *= k;
  return r;
}

BiPoly BiPoly::divided(const Integer& k) const {
  BiPoly r = *this;
  for (Term& t : r.terms_) {
    if (!divides(k, t.coeff)) throw std::domain_error("coefficient not divisible");
    t.coeff = exact_quotient(t.coeff, k);
  }
  return r;
}

BiPoly BiPoly::shifted(std::uint32_t i, std::uint32_t j) const {
  BiPoly r = *this;
  for (Term& t : r.terms_) {
    t.i += i;
    t.j += j;
  }
  return r;
}

BiPoly BiPoly::unshifted(std::uint32_t i, std::uint32_t j) const {
  BiPoly r = *this;
  for (Term& t : r.terms_) {
    if (t.i < i || t.j < j) throw std::domain_error("monomial does not divide polynomial");
    t.i -= i;
    t.j -= j;
  }
  return r;
}

BiPoly BiPoly::truncated_x(std::uint32_t n) const {
  BiPoly r;
  for (const Term& t : terms_) {
    if (t.i < n) r.terms_.push_back(t);
  }
  return r;
}

UniPoly BiPoly::coeff_of_x(std::uint32_t i) const {
  std::vector<Integer> v;
  for (const Term& t : terms_) {
    if (t.i != i) continue;
    if (v.size() <= t.j) v.resize(t.j + 1);
    v[t.j] = t.coeff;
  }
  return UniPoly(std::move(v));
}

UniPoly BiPoly::coeff_of_y(std::uint32_t j) const {
  std::vector<Integer> v;
  for (const Term& t : terms_) {
    if (t.j != j) continue;
    if (v.size() <= t.i) v.resize(t.i + 1);
    v[t.i] = t.coeff;
  }
  return UniPoly(std::move(v));
}

std::vector<UniPoly> BiPoly::as_poly_in_x() const {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(degree_x() + 1));
  for (const Term& t : terms_) {
    auto& row = rows[t.i];
    if (row.size() <= t.j) row.resize(t.j + 1);
    row[t.j] = t.coeff;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

std::vector<UniPoly> BiPoly::as_poly_in_y() const {
  std::vector<std::vector<Integer>> cols(static_cast<std::size_t>(degree_y() + 1));
  for (const Term& t : terms_) {
    auto& col = cols[t.j];
    if (col.size() <= t.i) col.resize(t.i + 1);
    col[t.i] = t.coeff;
  }
  std::vector<UniPoly> out;
  out.reserve(cols.size());
  for (auto& col : cols) out.emplace_back(std::move(col));
  return out;
}

BiPoly BiPoly::from_poly_in_x(const std::vector<UniPoly>& coeffs) {
  BiPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (sgn(c[j]) != 0) r.terms_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c[j]});
    }
  }
  return r;
}

BiPoly BiPoly::from_poly_in_y(const std::vector<UniPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) != 0) terms.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c[i]});
    }
  }
  return from_terms(std::move(terms));
}

UniPoly BiPoly::at_y(const Integer& value) const {
  std::vector<Integer> v(static_cast<std::size_t>(degree_x() + 1));
  // Terms are sorted by i then j, so each x-coefficient is a contiguous run.
  std::size_t k = 0;
  while (k < terms_.size()) {
    const std::uint32_t i = terms_[k].i;
    std::size_t end = k;
    while (end < terms_.size() && terms_[end].i == i) ++end;
    Integer acc = 0;
    for (std::size_t m = end; m-- > k;) {
      const std::uint32_t next_j = m > k ? terms_[m - 1].j : 0;
      acc += terms_[m].coeff;
      for (std::uint32_t e = next_j; e < terms_[m].j; ++e) acc *= value;
    }
    v[i] = acc;
    k = end;
  }
  return UniPoly(std::move(v));
}

Integer BiPoly::evaluate(const Integer& x, const Integer& y) const { return at_y(y).evaluate(x); }

namespace {

void append_monomial(std::ostringstream& os, std::uint32_t i, std::uint32_t j) {
  bool first = true;
  auto factor = [&](const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << var;
    if (e > 1) os << '^' << e;
    first = false;
  };
  factor("x", i);
  factor("y", j);
}

}  // namespace

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool neg = sgn(t.coeff) < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (t.i == 0 && t.j == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    append_monomial(os, t.i, t.j);
  }
  return os.str();
}

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    const Term& t = b.terms().front();
    return a.unshifted(t.i, t.j).divided(t.coeff);
  }
  // Lexicographic (x first) long division on a dense grid. The leading term of
  // b is its largest-j term among those with the largest i.
  const Term& lead = b.terms().back();
  const int ax = a.degree_x();
  if (ax < static_cast<int>(lead.i)) throw std::domain_error("inexact polynomial division");
  // For an exact division every partial product stays within deg_y(a).
  const std::size_t cols = static_cast<std::size_t>(a.degree_y()) + 1;
  Grid rem(static_cast<std::size_t>(ax) + 1, cols);
  for (const Term& t : a.terms()) rem.at(t.i, t.j) = t.coeff;

  std::vector<Term> quotient;
  for (std::size_t i = rem.rows; i-- > 0;) {
    for (std::size_t col = cols; col-- > 0;) {
      Integer& top = rem.at(i, col);
      if (sgn(top) == 0) continue;
      if (i < lead.i || col < lead.j) throw std::domain_error("inexact polynomial division");
      if (!divides(lead.coeff, top)) throw std::domain_error("inexact polynomial division");
      Integer q = exact_quotient(top, lead.coeff);
      const std::size_t qi = i - lead.i;
      const std::size_t qj = col - lead.j;
      for (const Term& t : b.terms()) {
        const std::size_t tc = qj + t.j;
        if (tc >= cols) throw std::domain_error("inexact polynomial division");
        Integer& cell = rem.at(qi + t.i, tc);
        mpz_submul(cell.get_mpz_t(), q.get_mpz_t(), t.coeff.get_mpz_t());
      }
      quotient.push_back({static_cast<std::uint32_t>(qi), static_cast<std::uint32_t>(qj), std::move(q)});
    }
  }
  return BiPoly::from_terms(std::move(quotient));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  using Ydense = Dense<UniPoly>;
  if (a.is_zero() && b.is_zero()) return {};
  const Ydense pa(a.as_poly_in_y());
  const Ydense pb(b.as_poly_in_y());
  return BiPoly::from_poly_in_y(gcd(pa, pb).coeffs());
}

BiPoly parse_bipoly(const std::string& text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial at offset " + std::to_string(pos) + ": " + why);
  };
  auto read_uint = [&]() -> std::uint32_t {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected exponent");
    return static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
  };
  skip();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    skip();
    Term t{0, 0, 1};
    bool have_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      t.coeff = Integer(text.substr(start, pos - start));
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
      } else {
        terms.push_back({0, 0, sign * t.coeff});
        continue;
      }
    }
    while (true) {
      skip();
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'y')) {
        if (!have_factor) fail("expected x or y");
        break;
      }
      const char var = text[pos++];
      std::uint32_t e = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = read_uint();
      }
      (var == 'x' ? t.i : t.j) += e;
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
        continue;
      }
      break;
    }
    t.coeff *= sign;
    terms.push_back(std::move(t));
  }
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace nbdom::poly
