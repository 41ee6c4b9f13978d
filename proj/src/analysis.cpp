#include "nbdom/analysis.hpp"

#include <stdexcept>

#include "nbdom/counting.hpp"
#include "nbdom/gf_engine.hpp"

namespace nbdom::analysis {

namespace {

std::string range_text(int r_max, int c_max, int from) {
  return std::to_string(from) + "<=r<=" + std::to_string(r_max) + ", " + std::to_string(from) +
         "<=c<=" + std::to_string(c_max);
}

/// Column tables up to c_max, each with rows 0..r_max.
std::vector<counting::CountTable> tables(int r_max, int c_max) {
  std::vector<counting::CountTable> out;
  for (int c = 1; c <= c_max; ++c) out.push_back(counting::count_table(c, r_max));
  return out;
}

std::string cell(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

}  // namespace

std::string ConjectureReport::status() const {
  if (passed()) return "pass";
  const Counterexample& e = counterexamples.front();
  return "counterexample(" + std::to_string(e.rows) + "," + std::to_string(e.cols) + "," + e.expected + "," +
         e.got + ")";
}

Rational d2_formula(int rows, int cols) {
  const Rational r(rows);
  const Rational c(cols);
  return 2 * c * c * r * r - 2 * (c * r * r + c * c * r) + Rational(1, 2) * (r * r + c * c) - 22 * c * r +
         Rational(59, 2) * (c + r) - 30;
}

ConjectureReport check_d2_formula(int r_max, int c_max) {
  if (r_max < 3 || c_max < 3) throw std::invalid_argument("the D(r,c,2) formula needs r, c >= 3");
  ConjectureReport rep;
  rep.name = "D(r,c,2) biquadratic";
  rep.domain_checked = range_text(r_max, c_max, 3);
  const auto t = tables(r_max, c_max);
  for (int c = 3; c <= c_max; ++c) {
    for (int r = 3; r <= r_max; ++r) {
      ++rep.cells_checked;
      Rational f = d2_formula(r, c);
      f.canonicalize();
      const Integer& got = t[static_cast<std::size_t>(c - 1)].at(r, 2);
      if (f.get_den() != 1 || f.get_num() != got) rep.counterexamples.push_back({r, c, f.get_str(), got.get_str()});
    }
  }
  return rep;
}

ConjectureReport check_d0_closed_form(int r_max, int c_max) {
  ConjectureReport rep;
  rep.name = "D(r,c,0) = 1";
  rep.domain_checked = range_text(r_max, c_max, 1);
  const auto t = tables(r_max, c_max);
  for (int c = 1; c <= c_max; ++c) {
    for (int r = 1; r <= r_max; ++r) {
      ++rep.cells_checked;
      const Integer& got = t[static_cast<std::size_t>(c - 1)].at(r, 0);
      if (got != 1) rep.counterexamples.push_back({r, c, "1", got.get_str()});
    }
  }
  return rep;
}

ConjectureReport check_d1_closed_form(int r_max, int c_max) {
  ConjectureReport rep;
  rep.name = "D(r,c,1) = 2rc - r - c";
  rep.domain_checked = range_text(r_max, c_max, 1);
  const auto t = tables(r_max, c_max);
  for (int c = 1; c <= c_max; ++c) {
    for (int r = 1; r <= r_max; ++r) {
      ++rep.cells_checked;
      const Integer want = 2 * r * c - r - c;
      const Integer& got = t[static_cast<std::size_t>(c - 1)].at(r, 1);
      if (got != want) rep.counterexamples.push_back({r, c, want.get_str(), got.get_str()});
    }
  }
  return rep;
}

std::optional<ParityClass> parity_class(int rows, int cols) {
  const auto odd = [](int v) { return v % 2 != 0; };
  if (odd(rows) && odd(cols)) return ParityClass::OddOdd;
  if (!odd(rows) && !odd(cols)) return ParityClass::BothEven;
  const int even = odd(rows) ? cols : rows;
  const int other = odd(rows) ? rows : cols;
  if (even % 4 == 2) return ParityClass::OddTwiceOdd;
  if (other >= 3) return ParityClass::FourOddAtLeast3;
  return std::nullopt;
}

std::vector<ConjectureReport> check_maxfill_conjectures(int r_max, int c_max) {
  std::vector<ConjectureReport> reps(3);
  reps[0].name = "d-bar = rc/4 + 1/2 for (2 mod 4) x odd";
  reps[1].name = "d-bar = rc/4 for even x even";
  reps[2].name = "d-bar = rc/4 for (0 mod 4) x odd >= 3";
  const counting::MaxFillTable mf = counting::max_fill_table(r_max, c_max);
  std::vector<std::string> odd_odd;
  for (int r = 1; r <= r_max; ++r) {
    for (int c = 1; c <= c_max; ++c) {
      const int got = mf.at(r, c);
      const auto pc = parity_class(r, c);
      if (!pc) continue;
      if (*pc == ParityClass::OddOdd) {
        odd_odd.push_back(cell(r, c) + "=" + std::to_string(got));
        continue;
      }
      ConjectureReport& rep = reps[static_cast<std::size_t>(*pc)];
      ++rep.cells_checked;
      const int want = *pc == ParityClass::OddTwiceOdd ? (r * c + 2) / 4 : r * c / 4;
      if (got != want) rep.counterexamples.push_back({r, c, std::to_string(want), std::to_string(got)});
      if (*pc == ParityClass::OddTwiceOdd && (r == 1 || c == 1)) {
        rep.notes.push_back("boundary cell " + cell(r, c) + ": d-bar " + std::to_string(got) + ", formula " +
                            std::to_string(want));
      }
    }
  }
  for (ConjectureReport& rep : reps) rep.domain_checked = range_text(r_max, c_max, 1);
  std::string obs = "odd x odd (no conjecture):";
  for (const std::string& s : odd_odd) obs += " " + s;
  reps[0].notes.push_back(obs);
  return reps;
}

std::vector<ConjectureReport> check_narrow_maxfill(int r_max) {
  std::vector<ConjectureReport> reps(2);
  reps[0].name = "d-bar(r,1) = floor((r+1)/3)";
  reps[1].name = "d-bar(r,2) = floor((r+1)/2)";
  for (int c = 1; c <= 2; ++c) {
    ConjectureReport& rep = reps[static_cast<std::size_t>(c - 1)];
    rep.domain_checked = "1<=r<=" + std::to_string(r_max) + ", c=" + std::to_string(c);
    const counting::CountTable t = counting::count_table(c, r_max);
    for (int r = 1; r <= r_max; ++r) {
      ++rep.cells_checked;
      const int want = c == 1 ? (r + 1) / 3 : (r + 1) / 2;
      const int got = t.max_fill(r);
      if (got != want) rep.counterexamples.push_back({r, c, std::to_string(want), std::to_string(got)});
    }
  }
  return reps;
}

Integer PolynomialVerdict::value_at(long r) const {
  Integer acc = 0;
  for (std::size_t l = 0; l < gamma.size(); ++l) {
    if (sgn(gamma[l]) == 0) continue;
    acc += gamma[l] * binomial(r + k - static_cast<long>(l) - 1, static_cast<unsigned long>(k - 1));
  }
  return acc;
}

ColumnSlice column_slice(const poly::RationalGF& gf, int d) {
  if (d < 0) throw std::invalid_argument("negative domino count");
  ColumnSlice out;
  out.gf = poly::series_y(gf, d).back();
  if (auto k = poly::one_minus_x_exponent(out.gf); k && *k >= 1) {
    PolynomialVerdict v;
    v.k = *k;
    v.gamma = out.gf.num.coeffs();
    v.first_valid_row = std::max(0, out.gf.num.degree() - *k + 1);
    out.polynomial = std::move(v);
  }
  return out;
}

ColumnSlice column_slice(int cols, int d) { return column_slice(gf::gf_by_elimination(cols), d); }

std::vector<std::vector<Integer>> diagonal_slice(int r_max) {
  std::vector<std::vector<Integer>> out{{Integer(1)}};
  for (int r = 1; r <= r_max; ++r) {
    const counting::CountTable t = counting::count_table(r, r);
    const auto row = t.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

poly::UniRational row_sum_gf(const poly::RationalGF& gf) { return poly::specialize_y(gf, Rational(1)); }

poly::UniRational row_sum_gf(int cols) { return row_sum_gf(gf::gf_by_elimination(cols)); }

}  // namespace nbdom::analysis
