#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include "data/reference_tables.hpp"
#include "nbdom/counting.hpp"

using namespace nbdom;
using namespace nbdom::counting;

namespace {

const CountTable& table_for(int cols) {
  static std::map<int, CountTable> cache;
  auto it = cache.find(cols);
  if (it == cache.end()) it = cache.emplace(cols, count_table(cols, 12)).first;
  return it->second;
}

}  // namespace

TEST(Successors, ForcedLetters) {
  // u forces d below it; h and d force 0.
  for (const auto& w : successor_words(words::RowWord::parse("u0hh"))) {
    EXPECT_EQ(w[0], words::Letter::D);
    EXPECT_EQ(w[2], words::Letter::Z);
    EXPECT_EQ(w[3], words::Letter::Z);
  }
  // Brute-force comparison with the compatibility predicate.
  const words::StateSpace space(5);
  for (const auto& src : space.words()) {
    std::vector<words::RowWord> direct;
    for (const auto& dst : space.words()) {
      if (words::compatible(src, dst)) direct.push_back(dst);
    }
    EXPECT_EQ(successor_words(src), direct) << src.str();
  }
}

TEST(Transitions, OneColumn) {
  const words::StateSpace space(1);
  const Transitions t(space);
  const auto z = space.index_of(words::RowWord::parse("0"));
  const auto u = space.index_of(words::RowWord::parse("u"));
  const auto d = space.index_of(words::RowWord::parse("d"));
  EXPECT_EQ(t.edge_count(), 4u);
  EXPECT_EQ(t.successors(u).size(), 1u);
  EXPECT_EQ(t.successors(u)[0], d);
  EXPECT_EQ(t.weight(u), 1);
  EXPECT_EQ(t.weight(d), 0);
  EXPECT_TRUE(t.terminal(z));
  EXPECT_FALSE(t.terminal(u));
}

TEST(CountTable, PrintedTables) {
  for (const auto& e : testdata::kCountTables) {
    if (e.rows > 12) continue;
    EXPECT_EQ(table_for(e.cols).at(e.rows, e.dominoes), Integer(std::string(e.value)))
        << "c=" << e.cols << " r=" << e.rows << " d=" << e.dominoes;
  }
}

TEST(CountTable, EmptyBoardAndZeroBeyondRow) {
  const CountTable t = count_table(3, 4);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.max_fill(0), 0);
  EXPECT_EQ(t.at(4, 99), 0);
  EXPECT_EQ(t.row(4).size(), 4u);
  EXPECT_EQ(t.row_sum(3), 1 + 12 + 12);
}

TEST(CountTable, NoInternalZeros) {
  for (int c = 1; c <= 9; ++c) {
    const CountTable t = count_table(c, 9);
    for (int r = 0; r <= 9; ++r) {
      for (int d = 0; d <= t.max_fill(r); ++d) EXPECT_GT(t.at(r, d), 0) << r << "x" << c << " d=" << d;
    }
  }
}

TEST(CountTable, Truncation) {
  const CountTable full = count_table(5, 9);
  const CountTable cut = count_table(5, 9, 3);
  EXPECT_EQ(cut.truncated_at(), 3);
  for (int r = 0; r <= 9; ++r) {
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(cut.at(r, d), full.at(r, d));
    EXPECT_EQ(cut.at(r, 4), 0);
  }
}

TEST(CountTable, SeriesModPrimeMatchesRowPolynomials) {
  const std::uint64_t p = 1000000007;
  const CountTable t = count_table(4, 15);
  for (std::uint64_t y : {0u, 1u, 2u, 12345u}) {
    const auto s = count_series_mod(4, 15, y, p);
    for (int r = 0; r <= 15; ++r) {
      Integer acc = 0;
      Integer pw = 1;
      for (const Integer& v : t.row(r)) {
        acc += v * pw;
        pw *= y;
      }
      Integer m = acc % p;
      EXPECT_EQ(s[static_cast<std::size_t>(r)], m.get_ui()) << r;
    }
  }
}

TEST(DominoCap, BoundsMaxFill) {
  for (int r = 1; r <= 12; ++r) {
    for (int c = 1; c <= 8; ++c) EXPECT_LE(max_fill(r, c), domino_cap(r, c));
  }
  EXPECT_EQ(max_fill(30, 1), 10);
}

TEST(BruteForce, MatchesDpForSmallBoards) {
  for (int r = 1; r <= 6; ++r) {
    for (int c = 1; c <= 6; ++c) {
      const auto brute = brute_force_counts(r, c);
      const CountTable t = count_table(c, r);
      ASSERT_EQ(static_cast<int>(brute.size()), t.max_fill(r) + 1) << r << "x" << c;
      for (std::size_t d = 0; d < brute.size(); ++d) EXPECT_EQ(t.at(r, static_cast<int>(d)), brute[d]);
    }
  }
}

TEST(BruteForce, UniqueTenByFive) {
  const auto all = brute_force_enumerate(10, 5, 13);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(is_non_bonding(all[0]));
  EXPECT_TRUE(brute_force_enumerate(10, 5, 14).empty());
}

TEST(BruteForce, PlacementsAreValidSortedAndDistinct) {
  const auto all = brute_force_enumerate(4, 4, 3);
  EXPECT_EQ(all.size(), 148u);
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_TRUE(is_non_bonding(all[k]));
    EXPECT_TRUE(std::is_sorted(all[k].dominoes.begin(), all[k].dominoes.end()));
    if (k > 0) EXPECT_LT(all[k - 1].dominoes, all[k].dominoes);
  }
}

TEST(BruteForce, RejectsLargeBoards) {
  EXPECT_THROW(brute_force_enumerate(9, 8, 1), std::invalid_argument);
  EXPECT_THROW(brute_force_enumerate(0, 3, 1), std::invalid_argument);
}

TEST(NonBonding, Checker) {
  PlacementSet p{3, 3, {{{0, 0}, Orientation::Horizontal}, {{2, 0}, Orientation::Horizontal}}};
  EXPECT_TRUE(is_non_bonding(p));
  p.dominoes = {{{0, 0}, Orientation::Horizontal}, {{1, 0}, Orientation::Horizontal}};
  EXPECT_FALSE(is_non_bonding(p));
  p.dominoes = {{{0, 0}, Orientation::Horizontal}, {{1, 2}, Orientation::Vertical}};
  EXPECT_TRUE(is_non_bonding(p));  // corner contact only
  p.dominoes = {{{0, 2}, Orientation::Horizontal}};
  EXPECT_FALSE(is_non_bonding(p));  // leaves the board
  p.dominoes = {{{0, 0}, Orientation::Vertical}, {{0, 0}, Orientation::Horizontal}};
  EXPECT_FALSE(is_non_bonding(p));
}

TEST(NonBonding, RandomPlacementsAgreeWithDpCounts) {
  // Any random subset accepted by the checker must appear in the enumeration.
  std::mt19937 rng(7);
  const auto all = brute_force_enumerate(4, 5, 3);
  std::uniform_int_distribution<int> row(0, 3), col(0, 4), orient(0, 1);
  int found = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    PlacementSet p{4, 5, {}};
    for (int k = 0; k < 3; ++k) {
      p.dominoes.push_back({{row(rng), col(rng)}, orient(rng) == 0 ? Orientation::Horizontal : Orientation::Vertical});
    }
    std::sort(p.dominoes.begin(), p.dominoes.end());
    if (!is_non_bonding(p)) continue;
    ++found;
    EXPECT_TRUE(std::find(all.begin(), all.end(), p) != all.end());
  }
  EXPECT_GT(found, 0);
}

TEST(Symmetry, TransposedTablesAgree) {
  for (int c1 = 1; c1 <= 7; ++c1) {
    for (int c2 = c1 + 1; c2 <= 7; ++c2) EXPECT_TRUE(symmetry_check(c1, c2, 8)) << c1 << "/" << c2;
  }
}

TEST(MaxFill, TableIsSymmetric) {
  const MaxFillTable t = max_fill_table(9, 9);
  for (int r = 1; r <= 9; ++r) {
    for (int c = 1; c <= 9; ++c) EXPECT_EQ(t.at(r, c), t.at(c, r));
  }
  EXPECT_EQ(t.at(10 - 1, 3), 7);
  EXPECT_FALSE(t.contains(10, 1));
}
