#include "nbdom/transfer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "nbdom/counting.hpp"

namespace nbdom::gf {

TransferMatrix::TransferMatrix(int cols) : cols_(cols), space_(cols) {
  const counting::Transitions trans(space_);
  for (std::size_t s = 0; s < trans.size(); ++s) {
    for (std::uint32_t t : trans.successors(s)) {
      entries_.push_back({static_cast<std::uint32_t>(s), t, trans.weight(t)});
    }
  }
}

bool TransferMatrix::has_edge(std::size_t from, std::size_t to) const {
  const TransferEntry key{static_cast<std::uint32_t>(from), static_cast<std::uint32_t>(to), 0};
  return std::binary_search(entries_.begin(), entries_.end(), key, [](const auto& a, const auto& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
}

poly::BiPoly TransferMatrix::entry(std::size_t from, std::size_t to) const {
  if (!has_edge(from, to)) return {};
  return poly::BiPoly::monomial(1, 1, static_cast<std::uint32_t>(words::word_weight(space_[to])));
}

TransferMatrix build_transfer(int cols) {
  if (cols < 1 || cols > words::kMaxStateCols) {
    throw std::invalid_argument("column count out of range: " + std::to_string(cols));
  }
  return TransferMatrix(cols);
}

LumpedSystem lump(const TransferMatrix& t) {
  const std::size_t n = t.size();
  const std::size_t empty = t.space().empty_index();
  std::vector<std::vector<std::pair<std::uint32_t, int>>> succ(n);
  for (const TransferEntry& e : t.entries()) succ[e.from].push_back({e.to, e.weight});

  // Blocks are numbered in order of their signature; the empty word gets the
  // largest key so it lands last.
  std::vector<std::uint32_t> block(n, 0);
  block[empty] = 1;
  std::size_t count = n == 1 ? 1 : 2;
  using Signature = std::pair<std::uint32_t, std::vector<std::pair<std::pair<std::uint32_t, int>, int>>>;
  while (true) {
    std::vector<Signature> sig(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::map<std::pair<std::uint32_t, int>, int> counts;
      for (auto [to, w] : succ[s]) ++counts[{block[to], w}];
      sig[s] = {block[s], {counts.begin(), counts.end()}};
    }
    std::vector<Signature> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t s = 0; s < n; ++s) {
      block[s] = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), sig[s]) - keys.begin());
    }
    if (keys.size() == count) break;
    count = keys.size();
  }
  // The empty word has the largest previous block id and is alone, so after
  // sorting it stays in the last block.

  LumpedSystem out;
  out.block_of = block;
  out.empty_block = block[empty];
  out.matrix.assign(count, std::vector<poly::UniPoly>(count));
  std::vector<bool> done(count, false);
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint32_t b = block[s];
    if (done[b]) continue;
    done[b] = true;
    for (auto [to, w] : succ[s]) {
      out.matrix[b][block[to]] += poly::UniPoly::monomial(1, static_cast<std::size_t>(w));
    }
  }
  if (out.empty_block != count - 1) throw std::logic_error("empty word block is not last");
  return out;
}

}  // namespace nbdom::gf
