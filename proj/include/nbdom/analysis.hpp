#pragma once

// Checks of closed forms, conjectures and slices against the exact counts.

#include <optional>
#include <string>
#include <vector>

#include "nbdom/bigint.hpp"
#include "nbdom/rational_gf.hpp"

namespace nbdom::analysis {

struct Counterexample {
  int rows = 0;
  int cols = 0;
  std::string expected;
  std::string got;
};

struct ConjectureReport {
  std::string name;
  std::string domain_checked;
  int cells_checked = 0;
  std::vector<Counterexample> counterexamples;
  /// Observations that are reported but not asserted.
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
  /// "pass" or "counterexample(r,c,expected,got)" for the first failure.
  std::string status() const;
};

/// 2c^2r^2 - 2(cr^2 + c^2r) + (r^2 + c^2)/2 - 22cr + 59(c + r)/2 - 30, exactly.
Rational d2_formula(int rows, int cols);

/// D(r, c, 2) against d2_formula for 3 <= r <= r_max, 3 <= c <= c_max; a
/// non-integral formula value is a counterexample. Throws std::invalid_argument
/// if either bound is below 3.
ConjectureReport check_d2_formula(int r_max, int c_max);

/// D(r, c, 0) = 1 on 1 <= r <= r_max, 1 <= c <= c_max.
ConjectureReport check_d0_closed_form(int r_max, int c_max);
/// D(r, c, 1) = 2rc - r - c on the same range.
ConjectureReport check_d1_closed_form(int r_max, int c_max);

/// Parity class of a board for the maximum-filling conjectures.
enum class ParityClass {
  OddTwiceOdd,    // one side = 2 mod 4, the other odd
  BothEven,
  FourOddAtLeast3,  // one side = 0 mod 4, the other odd >= 3
  OddOdd,
};

/// Empty for (0 mod 4) x 1 boards, which no conjecture covers.
std::optional<ParityClass> parity_class(int rows, int cols);

/// Three reports, one per conjecture, over 1 <= r <= r_max, 1 <= c <= c_max.
/// Cells where the odd side is 1 are checked and also listed in the notes as
/// boundary cells; odd x odd boards are only listed as observations.
std::vector<ConjectureReport> check_maxfill_conjectures(int r_max, int c_max);

/// d-bar(r, 1) = floor((r + 1) / 3) and d-bar(r, 2) = floor((r + 1) / 2).
std::vector<ConjectureReport> check_narrow_maxfill(int r_max);

/// a_r = sum_l gamma_l binom(r + k - l - 1, k - 1) for r >= first_valid_row,
/// when the generating function is (sum_l gamma_l x^l) / (1 - x)^k.
struct PolynomialVerdict {
  int k = 0;
  int first_valid_row = 0;
  std::vector<Integer> gamma;

  int degree() const { return k - 1; }
  Integer value_at(long r) const;
};

struct ColumnSlice {
  poly::UniRational gf;
  std::optional<PolynomialVerdict> polynomial;
};

/// [y^d] of a bivariate GF, reduced, with the polynomiality verdict.
ColumnSlice column_slice(const poly::RationalGF& gf, int d);
/// Same, with the GF of c columns computed by elimination.
ColumnSlice column_slice(int cols, int d);

/// Row r holds D(r, r, 0..d-bar) for 0 <= r <= r_max.
std::vector<std::vector<Integer>> diagonal_slice(int r_max);

/// H_c(x, 1), reduced.
poly::UniRational row_sum_gf(const poly::RationalGF& gf);
poly::UniRational row_sum_gf(int cols);

}  // namespace nbdom::analysis
