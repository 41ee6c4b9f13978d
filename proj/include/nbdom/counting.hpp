#pragma once

// Exact counts D(r, c, d) of placements of d non-bonding dominoes on an
// r x c board, by row-by-row dynamic programming over row words, plus an
// explicit enumerator used as an independent oracle.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nbdom/bigint.hpp"
#include "nbdom/word_model.hpp"

namespace nbdom::counting {

/// Successor lists of a state space in compressed-row form.
class Transitions {
 public:
  explicit Transitions(const words::StateSpace& space);

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const std::uint32_t> successors(std::size_t state) const {
    return {targets_.data() + offsets_[state], targets_.data() + offsets_[state + 1]};
  }
  int weight(std::size_t state) const { return weights_[state]; }
  /// Whether a row with this word can be the last row (no U protrudes).
  bool terminal(std::size_t state) const { return terminal_[state]; }
  std::size_t edge_count() const { return targets_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<int> weights_;
  std::vector<bool> terminal_;
};

/// All words that may follow `src`, in lexicographic order.
std::vector<words::RowWord> successor_words(const words::RowWord& src);

/// Upper bound on the number of dominoes on an r x c board. Every domino owns
/// its squares plus the squares right of its right end (inside an r x (c+1)
/// frame), which are pairwise disjoint, so d <= r(c+1)/3; likewise with rows.
int domino_cap(int rows, int cols);

class CountTable {
 public:
  CountTable(int cols, int rows_max, std::vector<std::vector<Integer>> counts,
             std::optional<int> truncated_at);

  int cols() const { return cols_; }
  int rows_max() const { return static_cast<int>(counts_.size()) - 1; }
  /// Set when the table only holds d <= *truncated_at.
  std::optional<int> truncated_at() const { return truncated_at_; }

  /// D(r, c, d); zero for d beyond the stored row.
  const Integer& at(int r, int d) const;
  /// D(r, c, 0..max_fill(r)).
  std::span<const Integer> row(int r) const;
  /// Largest d with a nonzero count (for a truncated table, capped at the truncation).
  int max_fill(int r) const;
  Integer row_sum(int r) const;

 private:
  int cols_;
  std::vector<std::vector<Integer>> counts_;
  std::optional<int> truncated_at_;
};

/// D(r, cols, d) for 0 <= r <= rows_max and every d.
CountTable count_table(int cols, int rows_max);
/// Same, keeping only d <= max_dominoes.
CountTable count_table(int cols, int rows_max, int max_dominoes);

/// sum_d D(r, cols, d) * y^d mod p for r = 0..rows_max (p < 2^63).
std::vector<std::uint64_t> count_series_mod(int cols, int rows_max, std::uint64_t y,
                                            std::uint64_t p);

enum class Orientation : std::uint8_t { Horizontal = 0, Vertical = 1 };

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A domino identified by its top/left square.
struct Domino {
  Cell anchor;
  Orientation orientation = Orientation::Horizontal;

  Cell second() const {
    return orientation == Orientation::Horizontal ? Cell{anchor.row, anchor.col + 1}
                                                  : Cell{anchor.row + 1, anchor.col};
  }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

struct PlacementSet {
  int rows = 0;
  int cols = 0;
  /// Sorted by (row, col, orientation) of the anchor.
  std::vector<Domino> dominoes;

  friend bool operator==(const PlacementSet&, const PlacementSet&) = default;
};

/// Largest board area brute_force_enumerate() accepts.
inline constexpr int kMaxBruteForceCells = 64;

/// Every placement of `dominoes` pairwise non-bonding dominoes, in lexicographic order.
std::vector<PlacementSet> brute_force_enumerate(int rows, int cols, int dominoes);

/// Number of placements for every d, by explicit enumeration.
std::vector<std::uint64_t> brute_force_counts(int rows, int cols);

/// Pairwise check used to audit placements: all squares in range, no overlap,
/// squares of distinct dominoes at L1 distance >= 2.
bool is_non_bonding(const PlacementSet& p);

/// Largest d with D(rows, cols, d) > 0.
int max_fill(int rows, int cols);

class MaxFillTable {
 public:
  int at(int rows, int cols) const { return entries_.at({rows, cols}); }
  bool contains(int rows, int cols) const { return entries_.count({rows, cols}) != 0; }
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  void set(int rows, int cols, int value) { entries_[{rows, cols}] = value; }

 private:
  std::map<std::pair<int, int>, int> entries_;
};

/// d-bar for 1 <= r <= rows_max, 1 <= c <= cols_max.
MaxFillTable max_fill_table(int rows_max, int cols_max);

/// Row c2 of the c1-column table equals row c1 of the c2-column table.
bool symmetry_check(int c1, int c2, int rows_max);

}  // namespace nbdom::counting
