#include "nbdom/gf_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "nbdom/counting.hpp"
#include "nbdom/modular.hpp"

namespace nbdom::gf {

using poly::BiPoly;
using poly::RationalGF;
using poly::Term;
using poly::UniPoly;

namespace {

/// 1 - x A(y) as bivariate entries.
std::vector<std::vector<BiPoly>> unit_minus_xa(const LumpedSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::vector<BiPoly>> m(n, std::vector<BiPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = -BiPoly::from_poly_in_x({UniPoly{}, sys.matrix[i][j]});
      if (i == j) m[i][j] += BiPoly(1);
    }
  }
  return m;
}

Integer l1_norm(const UniPoly& p) {
  Integer s = 0;
  for (const Integer& c : p.coeffs()) s += abs(c);
  return s;
}

std::uint64_t eval_mod(const UniPoly& p, std::uint64_t y, std::uint64_t prime) {
  std::uint64_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = modular::add_mod(modular::mul_mod(acc, y, prime), modular::reduce(p[i], prime), prime);
  }
  return acc;
}

/// p(x, y0) mod prime as coefficients in x.
std::vector<std::uint64_t> image_at_y(const BiPoly& p, std::uint64_t y0, std::uint64_t prime) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(p.degree_x(), -1) + 1), 0);
  for (const Term& t : p.terms()) {
    const std::uint64_t v = modular::mul_mod(modular::reduce(t.coeff, prime), modular::pow_mod(y0, t.j, prime), prime);
    out[t.i] = modular::add_mod(out[t.i], v, prime);
  }
  return out;
}

/// Assembles sum_{i,j} values[i * (ydeg + 1) + j] x^i y^j.
BiPoly assemble(const std::vector<Integer>& values, std::size_t xcount, std::size_t ycount, std::size_t offset) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < xcount; ++i) {
    for (std::size_t j = 0; j < ycount; ++j) {
      const Integer& v = values[offset + i * ycount + j];
      if (sgn(v) != 0) terms.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

/// Whether num and den still share a factor of positive x-degree; den(0, y) = 1
/// rules out factors in y alone.
bool probe_common_factor(const RationalGF& f) {
  const std::uint64_t p = modular::primes()[1];
  bool shared = true;
  for (std::uint64_t y0 : {2u, 3u, 5u, 7u}) {
    const auto g = modular::poly_gcd(image_at_y(f.num(), y0, p), image_at_y(f.den(), y0, p), p);
    if (g.size() <= 1) shared = false;
  }
  return shared;
}

}  // namespace

DeterminantPair determinants_fraction_free(const LumpedSystem& sys) {
  const std::size_t n = sys.size();
  auto m = unit_minus_xa(sys);
  BiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const BiPoly& pivot = m[k][k];
    if (pivot.is_zero()) throw std::logic_error("zero pivot in fraction-free elimination");
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool row_active = !m[i][k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        const bool cross = row_active && !m[k][j].is_zero();
        if (!cross && m[i][j].is_zero()) continue;
        BiPoly v = pivot * m[i][j];
        if (cross) v -= m[i][k] * m[k][j];
        m[i][j] = prev == BiPoly(1) ? std::move(v) : divide_exact(v, prev);
      }
      m[i][k] = BiPoly{};
    }
    prev = pivot;
  }
  return {m[n - 1][n - 1], n >= 2 ? m[n - 2][n - 2] : BiPoly(1)};
}

DeterminantPair determinants_multimodular(const LumpedSystem& sys) {
  const std::size_t n = sys.size();
  // Every coefficient of det is bounded by max |det| on the unit torus, which
  // Hadamard bounds by the product of row 2-norms of entry 1-norms.
  Integer bound_sq = 1;
  std::size_t ydeg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    int heaviest = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Integer e = l1_norm(sys.matrix[i][j]) + (i == j ? 1 : 0);
      row += e * e;
      heaviest = std::max(heaviest, sys.matrix[i][j].degree());
    }
    bound_sq *= row;
    ydeg += static_cast<std::size_t>(heaviest);
  }
  const std::size_t points = ydeg + 1;
  const std::size_t full_count = (n + 1) * points;
  const std::size_t minor_count = n * points;
  modular::CrtAccumulator crt(full_count + minor_count);
  std::vector<std::uint64_t> ys(points);
  for (std::size_t k = 0; k < points; ++k) ys[k] = k + 1;

  for (std::uint64_t p : modular::primes()) {
    // samples[m][k]: coefficient of x^m at y = ys[k].
    std::vector<std::vector<std::uint64_t>> full(n + 1, std::vector<std::uint64_t>(points));
    std::vector<std::vector<std::uint64_t>> minor(n, std::vector<std::uint64_t>(points));
    for (std::size_t k = 0; k < points; ++k) {
      std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = eval_mod(sys.matrix[i][j], ys[k], p);
      }
      // det(1 - x A) = x^n chi_A(1/x), so [x^m] = chi[n - m].
      const auto chi = modular::charpoly(a, p);
      for (std::size_t m = 0; m <= n; ++m) full[m][k] = chi[n - m];
      a.pop_back();
      for (auto& row : a) row.pop_back();
      const auto chi_minor = modular::charpoly(std::move(a), p);
      for (std::size_t m = 0; m < n; ++m) minor[m][k] = chi_minor[n - 1 - m];
    }
    std::vector<std::uint64_t> residues;
    residues.reserve(full_count + minor_count);
    for (const auto& row : full) {
      const auto c = modular::interpolate(ys, row, p);
      residues.insert(residues.end(), c.begin(), c.end());
    }
    for (const auto& row : minor) {
      const auto c = modular::interpolate(ys, row, p);
      residues.insert(residues.end(), c.begin(), c.end());
    }
    crt.add(residues, p);
    if (crt.modulus() * crt.modulus() > 4 * bound_sq) {
      return {assemble(crt.values(), n + 1, points, 0), assemble(crt.values(), n, points, full_count)};
    }
  }
  throw std::logic_error("ran out of primes for the determinant bound");
}

EliminationResult gf_by_elimination(const TransferMatrix& t, const EliminationOptions& opts) {
  const LumpedSystem sys = lump(t);
  EliminationResult out;
  out.states = t.size();
  out.lumped_states = sys.size();
  out.method = opts.method;
  if (out.method == EliminationMethod::Auto) {
    out.method = sys.size() <= opts.fraction_free_limit ? EliminationMethod::FractionFree
                                                         : EliminationMethod::Multimodular;
  }
  const DeterminantPair det = out.method == EliminationMethod::FractionFree ? determinants_fraction_free(sys)
                                                                            : determinants_multimodular(sys);
  // E = minor / full and E = 1 + x H.
  const BiPoly shifted = det.minor - det.full;
  BiPoly num;
  try {
    num = shifted.unshifted(1, 0);
  } catch (const std::domain_error&) {
    throw std::logic_error("E - 1 is not divisible by x");
  }
  const RationalGF raw(std::move(num), det.full);
  if (t.cols() <= opts.full_reduction_cols) {
    out.gf = poly::reduce(raw);
    out.fully_reduced = true;
  } else {
    out.gf = poly::reduce_content(raw);
    out.residual_factor = probe_common_factor(out.gf);
  }
  return out;
}

RationalGF gf_by_elimination(int cols) { return gf_by_elimination(build_transfer(cols)).gf; }

FitBounds default_fit_bounds(int cols) {
  const LumpedSystem sys = lump(build_transfer(cols));
  FitBounds b;
  b.x_degree = static_cast<int>(sys.size());
  for (const auto& row : sys.matrix) {
    int heaviest = 0;
    for (const UniPoly& e : row) heaviest = std::max(heaviest, e.degree());
    b.y_degree += heaviest;
  }
  return b;
}

bool series_matches_counts(const RationalGF& gf, int cols, int rows, std::string* why) {
  const auto series = poly::series_x(gf, rows - 1);
  const counting::CountTable table = counting::count_table(cols, rows - 1);
  for (int r = 0; r < rows; ++r) {
    const UniPoly& h = series[static_cast<std::size_t>(r)];
    const int top = std::max(h.degree(), table.max_fill(r));
    for (int d = 0; d <= top; ++d) {
      if (h[static_cast<std::size_t>(d)] != table.at(r, d)) {
        if (why != nullptr) {
          *why = "r=" + std::to_string(r) + " d=" + std::to_string(d) + ": series " +
                 h[static_cast<std::size_t>(d)].get_str() + ", count " + table.at(r, d).get_str();
        }
        return false;
      }
    }
  }
  return true;
}

namespace {

struct FitImage {
  std::size_t order = 0;
  std::vector<std::uint64_t> den;
  std::vector<std::uint64_t> num;
};

FitImage fit_at(int cols, int rows, std::uint64_t y0, std::uint64_t p, const FitBounds& b) {
  const auto seq = counting::count_series_mod(cols, rows - 1, y0, p);
  const auto conn = modular::berlekamp_massey(seq, p);
  FitImage img;
  img.order = conn.size() - 1;
  if (2 * img.order + 4 > static_cast<std::size_t>(rows)) {
    throw std::domain_error("not enough terms for the recurrence: x-degree bound too small");
  }
  const std::size_t width = static_cast<std::size_t>(b.x_degree) + 1;
  img.den.assign(width, 0);
  img.num.assign(width, 0);
  for (std::size_t i = 0; i < conn.size(); ++i) {
    if (conn[i] == 0) continue;
    if (i >= width) throw std::domain_error("denominator exceeds the x-degree bound");
    img.den[i] = conn[i];
  }
  for (std::size_t k = 0; k < img.order; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i <= k && i < conn.size(); ++i) {
      acc = modular::add_mod(acc, modular::mul_mod(conn[i], seq[k - i], p), p);
    }
    if (acc == 0) continue;
    if (k >= width) throw std::domain_error("numerator exceeds the x-degree bound");
    img.num[k] = acc;
  }
  return img;
}

}  // namespace

FitResult gf_by_series_fit(int cols, std::optional<FitBounds> bounds, int held_out) {
  if (cols < 1 || cols > words::kMaxStateCols) {
    throw std::invalid_argument("column count out of range: " + std::to_string(cols));
  }
  const FitBounds b = bounds ? *bounds : default_fit_bounds(cols);
  if (b.x_degree < 0 || b.y_degree < 0) throw std::invalid_argument("negative degree bound");
  const int rows = 2 * (b.x_degree + 1) + 4;
  const std::size_t width = static_cast<std::size_t>(b.x_degree) + 1;
  const std::size_t ycount = static_cast<std::size_t>(b.y_degree) + 1;
  constexpr std::size_t kChecks = 2;

  FitResult out;
  out.terms_used = rows;
  out.held_out = std::max(held_out, 10);
  modular::CrtAccumulator crt(2 * width * ycount);
  std::string last_mismatch;
  for (std::uint64_t p : modular::primes()) {
    // Sample y = 1, 2, ...; keep only points of the largest recurrence order.
    std::vector<std::uint64_t> ys;
    std::vector<FitImage> images;
    std::size_t best = 0;
    for (std::uint64_t y0 = 1; ys.size() < ycount + kChecks; ++y0) {
      if (y0 > 4 * (ycount + kChecks) + 16) throw std::domain_error("too many degenerate sample points");
      FitImage img = fit_at(cols, rows, y0, p, b);
      if (img.order < best) continue;
      if (img.order > best) {
        best = img.order;
        ys.clear();
        images.clear();
      }
      ys.push_back(y0);
      images.push_back(std::move(img));
    }
    const std::span<const std::uint64_t> fit_ys(ys.data(), ycount);
    std::vector<std::uint64_t> residues;
    residues.reserve(2 * width * ycount);
    for (int part = 0; part < 2; ++part) {
      for (std::size_t i = 0; i < width; ++i) {
        std::vector<std::uint64_t> vals(ycount);
        for (std::size_t k = 0; k < ycount; ++k) vals[k] = part == 0 ? images[k].den[i] : images[k].num[i];
        const auto c = modular::interpolate(fit_ys, vals, p);
        for (std::size_t k = ycount; k < ys.size(); ++k) {
          std::uint64_t acc = 0;
          for (std::size_t j = c.size(); j-- > 0;) acc = modular::add_mod(modular::mul_mod(acc, ys[k], p), c[j], p);
          const std::uint64_t want = part == 0 ? images[k].den[i] : images[k].num[i];
          if (acc != want) throw std::domain_error("coefficients exceed the y-degree bound");
        }
        residues.insert(residues.end(), c.begin(), c.end());
      }
    }
    const bool stable = crt.add(residues, p);
    ++out.primes_used;
    if (!stable || out.primes_used < 2) continue;
    const BiPoly den = assemble(crt.values(), width, ycount, 0);
    const BiPoly num = assemble(crt.values(), width, ycount, width * ycount);
    if (den.is_zero()) continue;
    RationalGF candidate(num, den);
    if (!series_matches_counts(candidate, cols, rows + out.held_out, &last_mismatch)) continue;
    out.gf = poly::reduce_content(candidate);
    const long ax = std::min(b.x_degree - out.gf.num().degree_x(), b.x_degree - out.gf.den().degree_x());
    const long ay = std::min(b.y_degree - out.gf.num().degree_y(), b.y_degree - out.gf.den().degree_y());
    out.nullity = (ax + 1) * (ay + 1);
    return out;
  }
  throw std::domain_error("series fit did not converge: " + last_mismatch);
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& e) { return e.passed; });
}

VerifyReport verify_gf(int cols, int terms, const RationalGF* reference) {
  if (cols < 1) throw std::invalid_argument("verify_gf needs at least one column");
  VerifyReport report;
  report.cols = cols;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const EliminationResult elim = gf_by_elimination(build_transfer(cols));
  const FitResult fit = gf_by_series_fit(cols);
  std::string why;
  add("elimination-normalized", elim.gf.is_normalized());
  add("fit-normalized", fit.gf.is_normalized());
  bool ok = series_matches_counts(elim.gf, cols, terms, &why);
  add("elimination-series", ok, ok ? std::to_string(terms) + " rows" : why);
  ok = series_matches_counts(fit.gf, cols, terms, &why);
  add("fit-series", ok, ok ? std::to_string(terms) + " rows" : why);
  add("engines-agree", elim.gf.same_function(fit.gf), "cross-multiplication");
  if (elim.residual_factor) {
    add("no-residual-factor", !*elim.residual_factor,
        *elim.residual_factor ? "common factor detected" : "coprime at sample points");
  }
  if (reference != nullptr) {
    add("reference-same-function", reference->same_function(elim.gf));
    add("reference-coefficients", *reference == elim.gf || *reference == fit.gf);
  }
  return report;
}

}  // namespace nbdom::gf
