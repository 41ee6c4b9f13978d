#pragma once

// Row-state words for the row-by-row description of a partially filled board.
//
// Each of the c squares in a row is one of
//   Z  ('0')  not covered,
//   H  ('h')  half of a horizontal domino,
//   U  ('u')  upper half of a vertical domino that continues into the next row,
//   D  ('d')  lower half of a vertical domino that started in the previous row.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nbdom::words {

enum class Letter : std::uint8_t { Z = 0, H = 1, U = 2, D = 3 };

char to_char(Letter l);
/// Accepts '0', 'h', 'u', 'd' (and upper-case variants); throws std::invalid_argument.
Letter letter_from_char(char ch);

/// Largest column count a packed word can hold.
inline constexpr int kMaxWordCols = 31;
/// Largest column count enumerate_states() accepts.
inline constexpr int kMaxStateCols = 16;

/// A row word packed at two bits per letter. Letter 0 sits in the most
/// significant used bits so that integer order equals lexicographic order
/// with Z < H < U < D.
class RowWord {
 public:
  RowWord() = default;
  /// All-Z word of the given length.
  explicit RowWord(int cols);
  RowWord(std::span<const Letter> letters);

  /// Parses "0hud" text. Does not check validity, only the alphabet.
  static RowWord parse(std::string_view text);

  int size() const { return cols_; }
  Letter operator[](int i) const {
    return static_cast<Letter>((bits_ >> shift(i)) & 3u);
  }
  void set(int i, Letter l);

  std::uint64_t packed() const { return bits_; }

  /// One bit per column (bit i = column i) for the given letter.
  std::uint32_t mask_of(Letter l) const;
  std::uint32_t nonzero_mask() const;

  std::string str() const;
  std::vector<Letter> letters() const;

  friend bool operator==(const RowWord&, const RowWord&) = default;
  friend auto operator<=>(const RowWord& a, const RowWord& b) {
    if (a.cols_ != b.cols_) return a.cols_ <=> b.cols_;
    return a.bits_ <=> b.bits_;
  }

 private:
  int shift(int i) const { return 2 * (cols_ - 1 - i); }

  std::uint64_t bits_ = 0;
  int cols_ = 0;
};

/// True iff every H-run has length exactly 2 and no two domino letters
/// that belong to different dominoes are horizontally adjacent.
bool is_valid_word(std::span<const Letter> letters);
bool is_valid_word(std::string_view text);
bool is_valid_word(const RowWord& w);

/// Number of dominoes a row contributes when it is appended: H-pairs plus U letters.
int word_weight(const RowWord& w);

/// Whether `dst` may be placed directly below `src`.
bool compatible(const RowWord& src, const RowWord& dst);

/// All valid words of length `cols` in lexicographic order.
class StateSpace {
 public:
  explicit StateSpace(int cols);

  int cols() const { return cols_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<RowWord>& words() const { return words_; }
  const RowWord& operator[](std::size_t i) const { return words_[i]; }

  /// Ordinal of a word; throws std::out_of_range if it is not a state.
  std::size_t index_of(const RowWord& w) const;
  bool contains(const RowWord& w) const;

  /// Ordinal of the all-Z word.
  std::size_t empty_index() const { return empty_index_; }

 private:
  int cols_;
  std::vector<RowWord> words_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t empty_index_ = 0;
};

/// Throws std::invalid_argument unless 1 <= cols <= kMaxStateCols.
StateSpace enumerate_states(int cols);

/// Builds the words of length `cols` from the block decomposition
/// "0" + w = concatenation of blocks {0, 0u, 0d, 0hh}. Used to cross-check
/// enumerate_states(); output is unsorted.
std::vector<RowWord> words_by_blocks(int cols);

/// s_c from s_c = s_{c-1} + 2 s_{c-2} + s_{c-3}, s_0 = 1, s_1 = 3, s_2 = 6.
std::uint64_t state_count(int cols);

}  // namespace nbdom::words
