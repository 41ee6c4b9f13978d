// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "data/reference_tables.hpp"
#include "nbdom/analysis.hpp"
#include "nbdom/counting.hpp"
#include "nbdom/gf_engine.hpp"
#include "nbdom/io.hpp"
#include "nbdom/word_model.hpp"

using namespace nbdom;
using poly::RationalGF;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

const RationalGF& gf_for(int cols) {
  static std::map<int, RationalGF> cache;
  auto it = cache.find(cols);
  if (it == cache.end()) it = cache.emplace(cols, gf::gf_by_elimination(cols)).first;
  return it->second;
}

const counting::CountTable& table_for(int cols, int rows_max) {
  static std::map<std::pair<int, int>, counting::CountTable> cache;
  auto it = cache.find({cols, rows_max});
  if (it == cache.end()) it = cache.emplace(std::pair{cols, rows_max}, counting::count_table(cols, rows_max)).first;
  return it->second;
}

std::vector<Integer> csv_ints(std::string_view text) {
  std::vector<Integer> out;
  std::stringstream ss{std::string(text)};
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_integer(cell));
  return out;
}

RationalGF printed_gf(int cols) {
  for (const auto& p : testdata::kPrintedGfs) {
    if (p.cols == cols) return RationalGF(poly::parse_bipoly(std::string(p.num)), poly::parse_bipoly(std::string(p.den)));
  }
  std::vector<poly::Term> num, den;
  for (const auto& e : testdata::kGfCoefficients) {
    if (e.cols != cols) continue;
    (e.kind == 'a' ? num : den)
        .push_back({static_cast<std::uint32_t>(e.x_exp), static_cast<std::uint32_t>(e.y_exp), Integer(e.value)});
  }
  return RationalGF(poly::BiPoly::from_terms(num), poly::BiPoly::from_terms(den));
}

std::string cell(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

/// Slices printed for one column count that disagree with the computed ones.
std::vector<std::string> slice_mismatches(int cols, std::span<const testdata::PrintedSlice> printed) {
  std::vector<std::string> out;
  for (const auto& p : printed) {
    const auto s = analysis::column_slice(gf_for(cols), p.dominoes);
    const poly::UniRational want{poly::UniPoly(csv_ints(p.numerator)).shifted(static_cast<std::size_t>(p.shift)),
                                 poly::one_minus_x_power(p.k)};
    if (!s.gf.same_function(want)) {
      out.push_back("c=" + std::to_string(cols) + " d=" + std::to_string(p.dominoes) + " printed " +
                    poly::describe(want) + ", computed " + poly::describe(s.gf));
    }
  }
  return out;
}

Outcome state_counts() {
  Outcome o;
  const std::uint64_t want[] = {3, 6, 13, 28, 60, 129, 277, 595};
  for (int c = 1; c <= 8; ++c) {
    const auto n = words::StateSpace(c).size();
    o.require(n == want[c - 1], "c=" + std::to_string(c) + ": " + std::to_string(n) + " states");
  }
  return o;
}

Outcome printed_tables() {
  Outcome o;
  int checked = 0;
  for (const auto& e : testdata::kCountTables) {
    const Integer got = table_for(e.cols, 12).at(e.rows, e.dominoes);
    o.require(got == Integer(std::string(e.value)),
              "D" + cell(e.rows, e.cols) + "," + std::to_string(e.dominoes) + " = " + got.get_str());
    ++checked;
  }
  const auto diag = analysis::diagonal_slice(9);
  for (const auto& e : testdata::kSquareBoards) {
    if (e.cols == 0) continue;  // 0 x 0 board: the empty placement only
    const auto& row = diag[static_cast<std::size_t>(e.rows)];
    const Integer got = static_cast<std::size_t>(e.dominoes) < row.size() ? row[static_cast<std::size_t>(e.dominoes)] : 0;
    o.require(got == Integer(std::string(e.value)), "square D" + cell(e.rows, e.cols) + "," +
                                                        std::to_string(e.dominoes) + " = " + got.get_str());
    ++checked;
  }
  o.require(diag[9].size() > 18 && diag[9][18] == 617404, "D(9,9,18) != 617404");
  o.notes.push_back(std::to_string(checked) + " printed counts, D(9,9,18) = " + diag[9][18].get_str());
  return o;
}

Outcome brute_force() {
  Outcome o;
  for (int r = 1; r <= 6; ++r) {
    for (int c = 1; c <= 6; ++c) {
      const auto brute = counting::brute_force_counts(r, c);
      const auto& t = table_for(c, 12);
      bool same = static_cast<int>(brute.size()) == t.max_fill(r) + 1;
      for (std::size_t d = 0; same && d < brute.size(); ++d) same = t.at(r, static_cast<int>(d)) == brute[d];
      o.require(same, "brute force differs from DP on " + cell(r, c));
    }
  }
  const auto unique = counting::brute_force_enumerate(10, 5, 13);
  o.require(unique.size() == 1, "(10,5,13) has " + std::to_string(unique.size()) + " placements");
  return o;
}

Outcome elimination() {
  Outcome o;
  for (int c = 1; c <= 4; ++c) {
    const RationalGF want = printed_gf(c);
    o.require(gf_for(c).same_function(want), "c=" + std::to_string(c) + " differs from the printed form");
    o.require(gf_for(c) == poly::reduce(want), "c=" + std::to_string(c) + " normal form differs");
  }
  return o;
}

Outcome engines() {
  Outcome o;
  for (int c = 1; c <= 6; ++c) {
    const gf::VerifyReport rep = gf::verify_gf(c, 30);
    for (const auto& e : rep.checks) o.require(e.passed, "c=" + std::to_string(c) + " " + e.name + ": " + e.detail);
  }
  return o;
}

Outcome taylor_slices() {
  Outcome o;
  for (int c = 2; c <= 5; ++c) {
    std::vector<testdata::PrintedSlice> mine;
    for (const auto& p : testdata::kPrintedSlices) {
      if (p.cols == c) mine.push_back(p);
    }
    o.require(!mine.empty(), "no printed slices for c=" + std::to_string(c));
    for (const auto& m : slice_mismatches(c, mine)) o.require(false, m);
  }
  const auto c6 = slice_mismatches(6, testdata::kPrintedSlicesC6);
  o.require(!c6.empty(), "printed c=6 expansion was not flagged");
  for (const auto& m : c6) o.notes.push_back("flagged " + m);
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (const auto& rep : {analysis::check_d0_closed_form(12, 12), analysis::check_d1_closed_form(12, 12),
                          analysis::check_d2_formula(10, 10)}) {
    o.require(rep.passed(), rep.name + ": " + rep.status());
  }
  return o;
}

Outcome max_fill() {
  Outcome o;
  const auto table = counting::max_fill_table(12, 12);
  for (const auto& e : testdata::kMaxFill) {
    const int got = table.at(e.rows, e.cols);
    if (got == e.max_dominoes) continue;
    // A printed entry is only set aside when an explicit placement beats it and
    // the printed count tables list a placement of that size.
    const auto witness = e.rows * e.cols <= counting::kMaxBruteForceCells
                             ? counting::brute_force_enumerate(e.rows, e.cols, got)
                             : std::vector<counting::PlacementSet>{};
    bool printed_count = false;
    for (const auto& t : testdata::kCountTables) {
      if (((t.rows == e.rows && t.cols == e.cols) || (t.rows == e.cols && t.cols == e.rows)) && t.dominoes == got &&
          Integer(std::string(t.value)) > 0) {
        printed_count = true;
      }
    }
    const bool erratum = got > e.max_dominoes && !witness.empty() && counting::is_non_bonding(witness.front()) &&
                         printed_count;
    if (erratum) {
      o.notes.push_back("printed d-bar" + cell(e.rows, e.cols) + " = " + std::to_string(e.max_dominoes) +
                        " contradicted by an explicit placement of " + std::to_string(got) +
                        " and by the printed count table");
    } else {
      o.require(false, "d-bar" + cell(e.rows, e.cols) + " = " + std::to_string(got) + ", printed " +
                           std::to_string(e.max_dominoes));
    }
  }
  for (const auto& rep : analysis::check_maxfill_conjectures(12, 12)) o.require(rep.passed(), rep.name + ": " + rep.status());
  for (const auto& rep : analysis::check_narrow_maxfill(30)) o.require(rep.passed(), rep.name + ": " + rep.status());
  return o;
}

Outcome row_sums() {
  Outcome o;
  for (const auto& p : testdata::kPrintedRowSums) {
    const poly::UniRational want{poly::UniPoly(csv_ints(p.num)), poly::UniPoly(csv_ints(p.den))};
    o.require(analysis::row_sum_gf(gf_for(p.cols)).same_function(want),
              "c=" + std::to_string(p.cols) + " row-sum GF differs from the printed form");
  }
  for (int c = 1; c <= 6; ++c) {
    const auto s = poly::series(analysis::row_sum_gf(gf_for(c)), 30);
    const auto t = counting::count_table(c, 29);
    for (int r = 0; r < 30; ++r) {
      o.require(s[static_cast<std::size_t>(r)] == t.row_sum(r),
                "c=" + std::to_string(c) + " row " + std::to_string(r) + " row sum differs");
    }
  }
  return o;
}

Outcome gf_files() {
  Outcome o;
  for (int c = 1; c <= 4; ++c) {
    const std::string text = io::write_gf_file(gf_for(c), c);
    const io::GfFile back = io::read_gf_file(text);
    o.require(back.cols == c && back.gf == gf_for(c) && io::write_gf_file(back.gf, c) == text,
              "round trip failed for c=" + std::to_string(c));
  }
  std::vector<std::tuple<char, int, int, long>> want, got;
  for (const auto& e : testdata::kGfCoefficients) {
    if (e.cols == 3) want.emplace_back(e.kind, e.x_exp, e.y_exp, e.value);
  }
  for (const auto& r : io::gf_records(gf_for(3), 3)) {
    got.emplace_back(r.kind, static_cast<int>(r.i), static_cast<int>(r.j), r.coeff.get_si());
  }
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  o.require(want == got, "c=3 records differ from the printed coefficient table");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "state counts 3, 6, 13, 28, 60, 129, 277, 595", 1.0, state_counts},
      {2, "printed count tables and square boards", 30.0, printed_tables},
      {3, "explicit enumeration equals DP for r, c <= 6; (10,5,13) unique", 0, brute_force},
      {4, "elimination reproduces the c = 1..3 closed forms and the c = 4 coefficient table", 0, elimination},
      {5, "elimination and series fit agree; series match DP for 30 rows, c <= 6", 0, engines},
      {6, "Taylor slices for c = 2..5 match; printed c = 6 expansion flagged", 0, taylor_slices},
      {7, "D(r,c,0), D(r,c,1) for r, c <= 12; D(r,c,2) biquadratic for 3..10", 0, closed_forms},
      {8, "d-bar table, parity conjectures for r, c <= 12, narrow formulas for r <= 30", 0, max_fill},
      {9, "row-sum GFs for c = 2, 3; row-sum series equal DP for c <= 6", 0, row_sums},
      {10, "gf file round trip for c = 1..4; c = 3 records match the printed table", 0, gf_files},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.require(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    all = all && o.passed;
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    note: " << n << '\n';
    for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) std::cout << "    fail: " << o.failures[k] << '\n';
    if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
  }
  return all ? 0 : 1;
}
