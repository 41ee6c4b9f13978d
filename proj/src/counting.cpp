#include "nbdom/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nbdom/modular.hpp"

namespace nbdom::counting {

using words::Letter;
using words::RowWord;

namespace {

// Fills the free columns of `dst` left to right. Columns in `fixed` already
// hold their forced letter (D or Z); `prev_free` tells whether the column to
// the left is empty.
void fill_successor(RowWord& dst, int pos, bool prev_free, std::uint32_t fixed,
                    std::vector<RowWord>& out) {
  const int c = dst.size();
  if (pos == c) {
    out.push_back(dst);
    return;
  }
  const bool is_fixed = ((fixed >> pos) & 1u) != 0;
  if (is_fixed) {
    const Letter l = dst[pos];
    if (l == Letter::D && !prev_free) return;
    fill_successor(dst, pos + 1, l == Letter::Z, fixed, out);
    return;
  }
  // Letters in lexicographic order Z < H < U so the output is sorted.
  dst.set(pos, Letter::Z);
  fill_successor(dst, pos + 1, true, fixed, out);
  if (!prev_free) return;
  const bool next_is_free = pos + 1 < c && ((fixed >> (pos + 1)) & 1u) == 0;
  const bool next_blocks = pos + 1 < c && ((fixed >> (pos + 1)) & 1u) && dst[pos + 1] == Letter::D;
  if (next_is_free) {
    dst.set(pos, Letter::H);
    dst.set(pos + 1, Letter::H);
    fill_successor(dst, pos + 2, false, fixed, out);
    dst.set(pos + 1, Letter::Z);
  }
  if (!next_blocks) {
    dst.set(pos, Letter::U);
    fill_successor(dst, pos + 1, false, fixed, out);
  }
  dst.set(pos, Letter::Z);
}

}  // namespace

std::vector<RowWord> successor_words(const RowWord& src) {
  const int c = src.size();
  RowWord dst(c);
  std::uint32_t fixed = 0;
  for (int i = 0; i < c; ++i) {
    switch (src[i]) {
      case Letter::U:
        dst.set(i, Letter::D);
        fixed |= 1u << i;
        break;
      case Letter::H:
      case Letter::D:
        fixed |= 1u << i;
        break;
      case Letter::Z:
        break;
    }
  }
  std::vector<RowWord> out;
  fill_successor(dst, 0, true, fixed, out);
  std::sort(out.begin(), out.end());
  return out;
}

Transitions::Transitions(const words::StateSpace& space) {
  const std::size_t s = space.size();
  offsets_.reserve(s + 1);
  offsets_.push_back(0);
  weights_.resize(s);
  terminal_.resize(s);
  for (std::size_t a = 0; a < s; ++a) {
    const RowWord& w = space[a];
    weights_[a] = words::word_weight(w);
    terminal_[a] = w.mask_of(Letter::U) == 0;
    for (const RowWord& b : successor_words(w)) {
      targets_.push_back(static_cast<std::uint32_t>(space.index_of(b)));
    }
    offsets_.push_back(targets_.size());
  }
}

int domino_cap(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return 0;
  return std::min(rows * (cols + 1) / 3, (rows + 1) * cols / 3);
}

CountTable::CountTable(int cols, int rows_max, std::vector<std::vector<Integer>> counts,
                       std::optional<int> truncated_at)
    : cols_(cols), counts_(std::move(counts)), truncated_at_(truncated_at) {
  if (static_cast<int>(counts_.size()) != rows_max + 1) {
    throw std::invalid_argument("count table: row count mismatch");
  }
}

const Integer& CountTable::at(int r, int d) const {
  static const Integer kZero = 0;
  if (r < 0 || r > rows_max()) throw std::out_of_range("row outside the count table");
  if (d < 0 || d >= static_cast<int>(counts_[r].size())) return kZero;
  return counts_[r][d];
}

std::span<const Integer> CountTable::row(int r) const {
  if (r < 0 || r > rows_max()) throw std::out_of_range("row outside the count table");
  return counts_[r];
}

int CountTable::max_fill(int r) const { return static_cast<int>(row(r).size()) - 1; }

Integer CountTable::row_sum(int r) const {
  Integer s = 0;
  for (const Integer& v : row(r)) s += v;
  return s;
}

namespace {

CountTable run_count(int cols, int rows_max, std::optional<int> max_dominoes) {
  if (rows_max < 0) throw std::invalid_argument("rows_max must be nonnegative");
  if (max_dominoes && *max_dominoes < 0) throw std::invalid_argument("negative domino bound");
  const words::StateSpace space(cols);
  const Transitions trans(space);
  const std::size_t s = space.size();

  // Partial boards may carry protruding U halves, so size by the next row's cap.
  const int cap = domino_cap(rows_max + 1, cols);
  const int width = max_dominoes ? std::min(*max_dominoes, cap) + 1 : cap + 1;
  const auto stride = static_cast<std::size_t>(width);

  std::vector<Integer> cur(s * stride);
  std::vector<Integer> next(s * stride);
  std::vector<int> top(s, -1);  // highest nonzero d per state
  std::vector<int> next_top(s, -1);
  cur[space.empty_index() * stride] = 1;
  top[space.empty_index()] = 0;

  std::vector<std::vector<Integer>> counts;
  counts.reserve(static_cast<std::size_t>(rows_max) + 1);
  counts.push_back({Integer(1)});

  for (int r = 1; r <= rows_max; ++r) {
    for (std::size_t b = 0; b < s; ++b) {
      for (int d = 0; d <= next_top[b]; ++d) next[b * stride + d] = 0;
      next_top[b] = -1;
    }
    for (std::size_t a = 0; a < s; ++a) {
      if (top[a] < 0) continue;
      const Integer* src = &cur[a * stride];
      for (std::uint32_t b : trans.successors(a)) {
        const int w = trans.weight(b);
        Integer* dst = &next[b * stride];
        int hi = top[a];
        if (hi + w >= width) {
          if (!max_dominoes) throw std::logic_error("domino count exceeded the area bound");
          hi = width - 1 - w;
        }
        for (int d = 0; d <= hi; ++d) {
          if (src[d] != 0) dst[d + w] += src[d];
        }
        next_top[b] = std::max(next_top[b], hi + w);
      }
    }
    std::swap(cur, next);
    std::swap(top, next_top);

    std::vector<Integer> row(stride);
    int row_top = -1;
    for (std::size_t b = 0; b < s; ++b) {
      if (!trans.terminal(b) || top[b] < 0) continue;
      for (int d = 0; d <= top[b]; ++d) row[d] += cur[b * stride + d];
      row_top = std::max(row_top, top[b]);
    }
    while (row_top >= 0 && row[row_top] == 0) --row_top;
    if (!max_dominoes && row_top > domino_cap(r, cols)) {
      throw std::logic_error("count beyond the domino cap for r=" + std::to_string(r));
    }
    row.resize(static_cast<std::size_t>(row_top + 1));
    counts.push_back(std::move(row));
  }
  return CountTable(cols, rows_max, std::move(counts), max_dominoes);
}

}  // namespace

CountTable count_table(int cols, int rows_max) { return run_count(cols, rows_max, std::nullopt); }

CountTable count_table(int cols, int rows_max, int max_dominoes) {
  return run_count(cols, rows_max, max_dominoes);
}

std::vector<std::uint64_t> count_series_mod(int cols, int rows_max, std::uint64_t y,
                                            std::uint64_t p) {
  using modular::add_mod;
  using modular::mul_mod;
  const words::StateSpace space(cols);
  const Transitions trans(space);
  const std::size_t s = space.size();
  std::vector<std::uint64_t> ypow(static_cast<std::size_t>(cols) + 1, 1 % p);
  for (std::size_t k = 1; k < ypow.size(); ++k) ypow[k] = mul_mod(ypow[k - 1], y % p, p);

  std::vector<std::uint64_t> cur(s, 0);
  std::vector<std::uint64_t> next(s, 0);
  cur[space.empty_index()] = 1 % p;
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(rows_max) + 1);
  out.push_back(1 % p);
  for (int r = 1; r <= rows_max; ++r) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t a = 0; a < s; ++a) {
      if (cur[a] == 0) continue;
      for (std::uint32_t b : trans.successors(a)) next[b] = add_mod(next[b], cur[a], p);
    }
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < s; ++b) {
      next[b] = mul_mod(next[b], ypow[trans.weight(b)], p);
      if (trans.terminal(b)) total = add_mod(total, next[b], p);
    }
    std::swap(cur, next);
    out.push_back(total);
  }
  return out;
}

namespace {

struct Board {
  int rows;
  int cols;
  std::vector<Domino> dominoes;
  std::vector<std::uint64_t> cells;      // squares covered
  std::vector<std::uint64_t> exclusion;  // squares within L1 distance 1

  Board(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1) throw std::invalid_argument("board dimensions must be positive");
    if (r * c > kMaxBruteForceCells) {
      throw std::invalid_argument("board too large for explicit enumeration (r*c <= 64)");
    }
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        for (Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
          Domino dm{{i, j}, o};
          const Cell b = dm.second();
          if (b.row >= r || b.col >= c) continue;
          const std::uint64_t m = bit(dm.anchor) | bit(b);
          dominoes.push_back(dm);
          cells.push_back(m);
          exclusion.push_back(m | neighbours(dm.anchor) | neighbours(b));
        }
      }
    }
  }

  std::uint64_t bit(Cell x) const { return std::uint64_t{1} << (x.row * cols + x.col); }

  std::uint64_t neighbours(Cell x) const {
    std::uint64_t m = 0;
    if (x.row > 0) m |= bit({x.row - 1, x.col});
    if (x.row + 1 < rows) m |= bit({x.row + 1, x.col});
    if (x.col > 0) m |= bit({x.row, x.col - 1});
    if (x.col + 1 < cols) m |= bit({x.row, x.col + 1});
    return m;
  }
};

template <class Visit>
void search(const Board& b, std::size_t start, std::uint64_t blocked, int depth, int max_depth,
            std::vector<std::size_t>& chosen, Visit& visit) {
  visit(depth, chosen);
  if (depth == max_depth) return;
  for (std::size_t k = start; k < b.dominoes.size(); ++k) {
    if ((b.cells[k] & blocked) != 0) continue;
    chosen.push_back(k);
    search(b, k + 1, blocked | b.exclusion[k], depth + 1, max_depth, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<PlacementSet> brute_force_enumerate(int rows, int cols, int dominoes) {
  if (dominoes < 0) throw std::invalid_argument("negative domino count");
  const Board b(rows, cols);
  std::vector<PlacementSet> out;
  std::vector<std::size_t> chosen;
  auto visit = [&](int depth, const std::vector<std::size_t>& ks) {
    if (depth != dominoes) return;
    PlacementSet p{rows, cols, {}};
    p.dominoes.reserve(ks.size());
    for (std::size_t k : ks) p.dominoes.push_back(b.dominoes[k]);
    out.push_back(std::move(p));
  };
  search(b, 0, 0, 0, dominoes, chosen, visit);
  return out;
}

std::vector<std::uint64_t> brute_force_counts(int rows, int cols) {
  const Board b(rows, cols);
  std::vector<std::uint64_t> counts;
  std::vector<std::size_t> chosen;
  auto visit = [&](int depth, const std::vector<std::size_t>&) {
    if (static_cast<int>(counts.size()) <= depth) counts.resize(static_cast<std::size_t>(depth) + 1, 0);
    ++counts[depth];
  };
  search(b, 0, 0, 0, rows * cols, chosen, visit);
  return counts;
}

bool is_non_bonding(const PlacementSet& p) {
  std::vector<std::pair<Cell, Cell>> pairs;
  for (const Domino& d : p.dominoes) {
    const Cell a = d.anchor;
    const Cell b = d.second();
    for (Cell x : {a, b}) {
      if (x.row < 0 || x.col < 0 || x.row >= p.rows || x.col >= p.cols) return false;
    }
    pairs.emplace_back(a, b);
  }
  auto dist = [](Cell u, Cell v) { return std::abs(u.row - v.row) + std::abs(u.col - v.col); };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      for (Cell u : {pairs[i].first, pairs[i].second}) {
        for (Cell v : {pairs[j].first, pairs[j].second}) {
          if (dist(u, v) < 2) return false;
        }
      }
    }
  }
  return true;
}

int max_fill(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions must be positive");
  return count_table(cols, rows).max_fill(rows);
}

MaxFillTable max_fill_table(int rows_max, int cols_max) {
  MaxFillTable t;
  for (int c = 1; c <= cols_max; ++c) {
    const CountTable table = count_table(c, rows_max);
    for (int r = 1; r <= rows_max; ++r) t.set(r, c, table.max_fill(r));
  }
  return t;
}

bool symmetry_check(int c1, int c2, int rows_max) {
  if (c1 > rows_max || c2 > rows_max) {
    throw std::invalid_argument("symmetry check needs rows_max >= both column counts");
  }
  const CountTable t1 = count_table(c1, rows_max);
  const CountTable t2 = count_table(c2, rows_max);
  const auto a = t1.row(c2);
  const auto b = t2.row(c1);
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace nbdom::counting
