#pragma once

// Weighted transfer matrix over row words. Every entry is x * y^w with w the
// number of dominoes started by the target word, so T = x * A(y).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nbdom/bipoly.hpp"
#include "nbdom/upoly.hpp"
#include "nbdom/word_model.hpp"

namespace nbdom::gf {

struct TransferEntry {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  int weight = 0;  // exponent of y
};

class TransferMatrix {
 public:
  explicit TransferMatrix(int cols);

  int cols() const { return cols_; }
  const words::StateSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  /// Sorted by (from, to).
  const std::vector<TransferEntry>& entries() const { return entries_; }

  /// x * y^w for compatible words, zero otherwise.
  poly::BiPoly entry(std::size_t from, std::size_t to) const;
  bool has_edge(std::size_t from, std::size_t to) const;

 private:
  int cols_;
  words::StateSpace space_;
  std::vector<TransferEntry> entries_;
};

/// Throws std::invalid_argument for c outside [1, kMaxStateCols].
TransferMatrix build_transfer(int cols);

/// Quotient of T by the coarsest partition that keeps the empty word alone
/// and gives every state of a block the same weighted successor counts into
/// each block. The all-Z entry of (1 - T)^-1 is unchanged by the quotient.
struct LumpedSystem {
  /// Block of every state.
  std::vector<std::uint32_t> block_of;
  /// A(y) with T = x * A(y) on blocks; dense, row = source block.
  std::vector<std::vector<poly::UniPoly>> matrix;
  /// Index of the empty word's block; always the last block.
  std::size_t empty_block = 0;

  std::size_t size() const { return matrix.size(); }
};

LumpedSystem lump(const TransferMatrix& t);

}  // namespace nbdom::gf
