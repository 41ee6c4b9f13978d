#include <gtest/gtest.h>

#include <sstream>

#include "data/reference_tables.hpp"
#include "nbdom/analysis.hpp"
#include "nbdom/counting.hpp"

using namespace nbdom;
using namespace nbdom::analysis;

namespace {

std::vector<Integer> csv_ints(std::string_view text) {
  std::vector<Integer> out;
  std::stringstream ss{std::string(text)};
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_integer(cell));
  return out;
}

poly::UniPoly uni(std::string_view text) { return poly::UniPoly(csv_ints(text)); }

}  // namespace

TEST(ClosedForms, QuadraticValues) {
  EXPECT_EQ(d2_formula(3, 3), 12);
  EXPECT_EQ(d2_formula(4, 5), 256);
  EXPECT_EQ(d2_formula(3, 10), 768);
  EXPECT_EQ(d2_formula(5, 4), d2_formula(4, 5));
}

TEST(ClosedForms, HoldOnTheCheckedRange) {
  const ConjectureReport d0 = check_d0_closed_form(12, 12);
  const ConjectureReport d1 = check_d1_closed_form(12, 12);
  const ConjectureReport d2 = check_d2_formula(10, 10);
  EXPECT_TRUE(d0.passed()) << d0.status();
  EXPECT_TRUE(d1.passed()) << d1.status();
  EXPECT_TRUE(d2.passed()) << d2.status();
  EXPECT_EQ(d0.cells_checked, 144);
  EXPECT_EQ(d2.cells_checked, 64);
  EXPECT_EQ(d2.status(), "pass");
  EXPECT_THROW(check_d2_formula(2, 5), std::invalid_argument);
}

TEST(ClosedForms, QuadraticFailsOutsideItsRange) {
  // Two-row boards are not covered by the biquadratic.
  const auto t = counting::count_table(5, 2);
  EXPECT_NE(d2_formula(2, 5), Rational(t.at(2, 2)));
}

TEST(Parity, Classes) {
  EXPECT_EQ(parity_class(6, 5), ParityClass::OddTwiceOdd);
  EXPECT_EQ(parity_class(5, 6), ParityClass::OddTwiceOdd);
  EXPECT_EQ(parity_class(2, 1), ParityClass::OddTwiceOdd);
  EXPECT_EQ(parity_class(4, 6), ParityClass::BothEven);
  EXPECT_EQ(parity_class(8, 3), ParityClass::FourOddAtLeast3);
  EXPECT_EQ(parity_class(7, 9), ParityClass::OddOdd);
  EXPECT_FALSE(parity_class(4, 1).has_value());
  EXPECT_FALSE(parity_class(1, 8).has_value());
}

TEST(Parity, ConjecturesHoldOnTheCheckedRange) {
  const auto reports = check_maxfill_conjectures(11, 11);
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.status();
    EXPECT_GT(r.cells_checked, 0);
  }
  EXPECT_FALSE(reports[0].notes.empty());
}

TEST(Parity, NarrowBoards) {
  const auto reports = check_narrow_maxfill(30);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.name << ": " << r.status();
}

TEST(Slices, MatchPrintedForms) {
  for (const auto& p : testdata::kPrintedSlices) {
    if (p.cols > 4) continue;
    const ColumnSlice s = column_slice(p.cols, p.dominoes);
    const poly::UniRational want{uni(p.numerator).shifted(static_cast<std::size_t>(p.shift)),
                                 poly::one_minus_x_power(p.k)};
    EXPECT_TRUE(s.gf.same_function(want)) << "c=" << p.cols << " d=" << p.dominoes << ": " << poly::describe(s.gf);
    ASSERT_TRUE(s.polynomial.has_value());
    EXPECT_EQ(s.polynomial->k, p.k);
  }
}

TEST(Slices, PolynomialVerdictReproducesCounts) {
  for (int c = 2; c <= 5; ++c) {
    const auto t = counting::count_table(c, 30, 4);
    for (int d = 0; d <= 4; ++d) {
      const ColumnSlice s = column_slice(c, d);
      ASSERT_TRUE(s.polynomial.has_value()) << c << "," << d;
      const PolynomialVerdict& v = *s.polynomial;
      EXPECT_EQ(v.degree(), d) << c << "," << d;
      for (int r = v.first_valid_row; r <= 30; ++r) EXPECT_EQ(v.value_at(r), t.at(r, d)) << c << "," << d << " r=" << r;
    }
  }
}

TEST(Slices, FirstValidRowIsTight) {
  const ColumnSlice s = column_slice(3, 3);
  ASSERT_TRUE(s.polynomial.has_value());
  EXPECT_GE(s.polynomial->first_valid_row, 0);
  const auto t = counting::count_table(3, 30, 3);
  if (s.polynomial->first_valid_row > 0) {
    const int r = s.polynomial->first_valid_row - 1;
    EXPECT_NE(s.polynomial->value_at(r), t.at(r, 3));
  }
}

TEST(Slices, Diagonal) {
  const auto diag = diagonal_slice(7);
  ASSERT_EQ(diag.size(), 8u);
  EXPECT_EQ(diag[0], std::vector<Integer>{1});
  for (int r = 1; r <= 7; ++r) {
    const auto t = counting::count_table(r, r);
    const auto row = t.row(r);
    EXPECT_EQ(diag[static_cast<std::size_t>(r)], std::vector<Integer>(row.begin(), row.end())) << r;
  }
}

TEST(RowSums, MatchPrintedForms) {
  for (const auto& p : testdata::kPrintedRowSums) {
    const poly::UniRational want{uni(p.num), uni(p.den)};
    EXPECT_TRUE(row_sum_gf(p.cols).same_function(want)) << p.cols << ": " << poly::describe(row_sum_gf(p.cols));
  }
}

TEST(RowSums, SeriesMatchesCounts) {
  for (int c = 1; c <= 5; ++c) {
    const poly::UniRational f = row_sum_gf(c);
    const auto s = poly::series(f, 25);
    const auto t = counting::count_table(c, 24);
    for (int r = 0; r <= 24; ++r) EXPECT_EQ(s[static_cast<std::size_t>(r)], t.row_sum(r)) << c << " r=" << r;
  }
}
