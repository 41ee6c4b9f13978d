#include "nbdom/modular.hpp"

namespace nbdom::modular {

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::span<const std::uint64_t> primes() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = (std::uint64_t{1} << 62) - 1; out.size() < 64; n -= 2) {
      if (is_prime(n)) out.push_back(n);
    }
    return out;
  }();
  return table;
}

std::vector<std::uint64_t> berlekamp_massey(std::span<const std::uint64_t> s, std::uint64_t p) {
  std::vector<std::uint64_t> c{1};
  std::vector<std::uint64_t> b{1};
  std::size_t len = 0;
  std::size_t m = 1;
  std::uint64_t last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::uint64_t disc = s[n] % p;
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) {
      disc = add_mod(disc, mul_mod(c[i], s[n - i] % p, p), p);
    }
    if (disc == 0) {
      ++m;
      continue;
    }
    const std::uint64_t coef = mul_mod(disc, inv_mod(last, p), p);
    const std::vector<std::uint64_t> prev = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      c[i + m] = sub_mod(c[i + m], mul_mod(coef, b[i], p), p);
    }
    if (2 * len <= n) {
      len = n + 1 - len;
      b = prev;
      last = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(len + 1, 0);
  return c;
}

std::vector<std::uint64_t> interpolate(std::span<const std::uint64_t> xs,
                                       std::span<const std::uint64_t> ys, std::uint64_t p) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences.
  std::vector<std::uint64_t> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const std::uint64_t num = sub_mod(coef[i], coef[i - 1], p);
      const std::uint64_t den = sub_mod(xs[i], xs[i - j], p);
      coef[i] = mul_mod(num, inv_mod(den, p), p);
      if (i == j) break;
    }
  }
  // Horner expansion of the Newton form into monomials.
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // out = out * (x - xs[k]) + coef[k]
    for (std::size_t i = n - 1; i > 0; --i) {
      out[i] = sub_mod(out[i - 1], mul_mod(out[i], xs[k], p), p);
    }
    out[0] = sub_mod(0, mul_mod(out[0], xs[k], p), p);
    out[0] = add_mod(out[0], coef[k], p);
  }
  return out;
}

std::vector<std::uint64_t> charpoly(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][m]);
    }
    const std::uint64_t inv = inv_mod(a[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (a[i][m - 1] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][m - 1], inv, p);
      // Row i -= f * row m, then column m += f * column i.
      for (std::size_t j = m - 1; j < n; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(f, a[m][j], p), p);
      for (std::size_t r = 0; r < n; ++r) a[r][m] = add_mod(a[r][m], mul_mod(f, a[r][i], p), p);
    }
  }
  // chi[k] is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<std::uint64_t>> chi(n + 1);
  chi[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = k - 1;
    std::vector<std::uint64_t> next(k + 1, 0);
    for (std::size_t i = 0; i < chi[m].size(); ++i) {
      next[i + 1] = add_mod(next[i + 1], chi[m][i], p);
      next[i] = sub_mod(next[i], mul_mod(a[m][m], chi[m][i], p), p);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      prod = mul_mod(prod, a[m - i + 1][m - i], p);
      const std::uint64_t h = mul_mod(prod, a[m - i][m], p);
      if (h == 0) continue;
      for (std::size_t j = 0; j < chi[m - i].size(); ++j) {
        next[j] = sub_mod(next[j], mul_mod(h, chi[m - i][j], p), p);
      }
    }
    chi[k] = std::move(next);
  }
  return chi[n];
}

namespace {

void trim(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

std::vector<std::uint64_t> poly_gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                                    std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv, p);
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = sub_mod(a[off + i], mul_mod(f, b[i], p), p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (std::uint64_t& v : a) v = mul_mod(v, inv, p);
  }
  return a;
}

bool CrtAccumulator::add(std::span<const std::uint64_t> residues, std::uint64_t p) {
  if (residues.size() != values_.size()) throw std::invalid_argument("CRT: size mismatch");
  const std::uint64_t m_mod_p = reduce(modulus_, p);
  const std::uint64_t m_inv = inv_mod(m_mod_p, p);
  Integer next_modulus = modulus_ * Integer(static_cast<unsigned long>(p));
  Integer half = next_modulus / 2;
  bool stable = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Integer& v = values_[i];
    const std::uint64_t t = mul_mod(sub_mod(residues[i] % p, reduce(v, p), p), m_inv, p);
    if (t == 0) continue;
    stable = false;
    v += modulus_ * Integer(static_cast<unsigned long>(t));
    if (v > half) v -= next_modulus;
    if (v <= -half) v += next_modulus;
  }
  modulus_ = std::move(next_modulus);
  return stable;
}

}  // namespace nbdom::modular
