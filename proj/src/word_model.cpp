#include "nbdom/word_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbdom::words {

char to_char(Letter l) {
  switch (l) {
    case Letter::Z:
      return '0';
    case Letter::H:
      return 'h';
    case Letter::U:
      return 'u';
    case Letter::D:
      return 'd';
  }
  return '?';
}

Letter letter_from_char(char ch) {
  switch (ch) {
    case '0':
    case 'z':
    case 'Z':
      return Letter::Z;
    case 'h':
    case 'H':
      return Letter::H;
    case 'u':
    case 'U':
      return Letter::U;
    case 'd':
    case 'D':
      return Letter::D;
    default:
      throw std::invalid_argument(std::string("not a row-word letter: '") + ch + "'");
  }
}

RowWord::RowWord(int cols) : cols_(cols) {
  if (cols < 1 || cols > kMaxWordCols) {
    throw std::invalid_argument("row word length out of range: " + std::to_string(cols));
  }
}

RowWord::RowWord(std::span<const Letter> letters) : RowWord(static_cast<int>(letters.size())) {
  for (int i = 0; i < cols_; ++i) set(i, letters[i]);
}

RowWord RowWord::parse(std::string_view text) {
  RowWord w(static_cast<int>(text.size()));
  for (int i = 0; i < w.cols_; ++i) w.set(i, letter_from_char(text[i]));
  return w;
}

void RowWord::set(int i, Letter l) {
  const int s = shift(i);
  bits_ = (bits_ & ~(std::uint64_t{3} << s)) | (std::uint64_t{static_cast<std::uint8_t>(l)} << s);
}

std::uint32_t RowWord::mask_of(Letter l) const {
  std::uint32_t m = 0;
  for (int i = 0; i < cols_; ++i) {
    if ((*this)[i] == l) m |= 1u << i;
  }
  return m;
}

std::uint32_t RowWord::nonzero_mask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < cols_; ++i) {
    if ((*this)[i] != Letter::Z) m |= 1u << i;
  }
  return m;
}

std::string RowWord::str() const {
  std::string s(static_cast<std::size_t>(cols_), '0');
  for (int i = 0; i < cols_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

std::vector<Letter> RowWord::letters() const {
  std::vector<Letter> out(static_cast<std::size_t>(cols_));
  for (int i = 0; i < cols_; ++i) out[i] = (*this)[i];
  return out;
}

bool is_valid_word(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n;) {
    if (letters[i] != Letter::H) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && letters[j] == Letter::H) ++j;
    // Two abutting horizontal dominoes would share an edge.
    if (j - i != 2) return false;
    i = j;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Letter a = letters[i];
    const Letter b = letters[i + 1];
    if (a == Letter::Z || b == Letter::Z) continue;
    if (a == Letter::H && b == Letter::H) continue;  // one pair, runs are exactly 2
    return false;
  }
  return true;
}

bool is_valid_word(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '0':
      case 'h':
      case 'u':
      case 'd':
        letters.push_back(letter_from_char(ch));
        break;
      default:
        return false;
    }
  }
  return is_valid_word(letters);
}

bool is_valid_word(const RowWord& w) { return is_valid_word(w.letters()); }

int word_weight(const RowWord& w) {
  int h = 0;
  int u = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::H) ++h;
    if (w[i] == Letter::U) ++u;
  }
  return h / 2 + u;
}

bool compatible(const RowWord& src, const RowWord& dst) {
  if (src.size() != dst.size()) return false;
  if (src.mask_of(Letter::U) != dst.mask_of(Letter::D)) return false;
  const std::uint32_t blocked = src.mask_of(Letter::H) | src.mask_of(Letter::D);
  return (blocked & dst.nonzero_mask()) == 0;
}

namespace {

void extend_states(RowWord& w, int pos, bool prev_free, std::vector<RowWord>& out) {
  const int c = w.size();
  if (pos == c) {
    out.push_back(w);
    return;
  }
  w.set(pos, Letter::Z);
  extend_states(w, pos + 1, true, out);
  if (!prev_free) {
    w.set(pos, Letter::Z);
    return;
  }
  for (Letter l : {Letter::U, Letter::D}) {
    w.set(pos, l);
    extend_states(w, pos + 1, false, out);
  }
  if (pos + 1 < c) {
    w.set(pos, Letter::H);
    w.set(pos + 1, Letter::H);
    extend_states(w, pos + 2, false, out);
    w.set(pos + 1, Letter::Z);
  }
  w.set(pos, Letter::Z);
}

}  // namespace

StateSpace::StateSpace(int cols) : cols_(cols) {
  if (cols < 1 || cols > kMaxStateCols) {
    throw std::invalid_argument("column count must be in [1, " + std::to_string(kMaxStateCols) +
                                "], got " + std::to_string(cols));
  }
  RowWord w(cols);
  extend_states(w, 0, true, words_);
  std::sort(words_.begin(), words_.end());
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i].packed(), i);
  empty_index_ = index_.at(RowWord(cols).packed());
}

std::size_t StateSpace::index_of(const RowWord& w) const {
  if (w.size() != cols_) throw std::out_of_range("word length differs from state space");
  auto it = index_.find(w.packed());
  if (it == index_.end()) throw std::out_of_range("not a valid state: " + w.str());
  return it->second;
}

bool StateSpace::contains(const RowWord& w) const {
  return w.size() == cols_ && index_.count(w.packed()) != 0;
}

StateSpace enumerate_states(int cols) { return StateSpace(cols); }

std::vector<RowWord> words_by_blocks(int cols) {
  if (cols < 1 || cols > kMaxStateCols) {
    throw std::invalid_argument("column count out of range");
  }
  // Strings of length cols+1 that start with '0', built from blocks.
  std::vector<std::vector<std::string>> by_len(static_cast<std::size_t>(cols) + 2);
  by_len[0].push_back("");
  static constexpr std::string_view kBlocks[] = {"0", "0u", "0d", "0hh"};
  for (int n = 1; n <= cols + 1; ++n) {
    for (std::string_view block : kBlocks) {
      const int prev = n - static_cast<int>(block.size());
      if (prev < 0) continue;
      for (const std::string& s : by_len[prev]) by_len[n].push_back(s + std::string(block));
    }
  }
  std::vector<RowWord> out;
  out.reserve(by_len[cols + 1].size());
  for (const std::string& s : by_len[cols + 1]) out.push_back(RowWord::parse(s.substr(1)));
  return out;
}

std::uint64_t state_count(int cols) {
  if (cols < 0) throw std::invalid_argument("negative column count");
  std::uint64_t a = 1, b = 3, c = 6;  // s_0, s_1, s_2
  if (cols == 0) return a;
  if (cols == 1) return b;
  for (int n = 3; n <= cols; ++n) {
    const std::uint64_t next = c + 2 * b + a;
    a = b;
    b = c;
    c = next;
  }
  return c;
}

}  // namespace nbdom::words
