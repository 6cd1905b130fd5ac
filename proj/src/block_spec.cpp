#include "crystbraid/block_spec.hpp"

#include <charconv>
#include <numeric>

#include "crystbraid/errors.hpp"

namespace cryst {

BlockSpec::BlockSpec(int n, std::vector<int> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("block spec needs at least one block");
  int sum = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int b = blocks_[k];
    if (b < 3 || b % 2 == 0) throw DomainError("block sizes must be odd and at least 3, got " + std::to_string(b));
    if (k > 0 && b < blocks_[k - 1]) throw DomainError("block sizes must be non-decreasing");
    sum += b;
  }
  if (sum > n) throw DomainError("blocks sum to " + std::to_string(sum) + " > n=" + std::to_string(n));
}

BlockSpec BlockSpec::parse(int n, std::string_view text) {
  std::vector<int> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad block size '" + std::string(tok) + "'");
    blocks.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return BlockSpec(n, std::move(blocks));
}

int BlockSpec::offset(int r) const {
  if (r < 1 || r > count()) throw RangeError("block index out of range");
  return std::accumulate(blocks_.begin(), blocks_.begin() + (r - 1), 0);
}

int BlockSpec::total() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

std::int64_t BlockSpec::lcm() const {
  std::int64_t m = 1;
  for (int b : blocks_) m = std::lcm(m, static_cast<std::int64_t>(b));
  return m;
}

Permutation BlockSpec::theta() const {
  std::vector<std::vector<int>> cycles;
  int off = 0;
  for (int b : blocks_) {
    std::vector<int> c(b);
    std::iota(c.begin(), c.end(), off + 1);
    cycles.push_back(std::move(c));
    off += b;
  }
  return Permutation::from_cycles(n_, cycles);
}

std::string BlockSpec::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < blocks_.size(); ++k) s += (k ? "," : "") + std::to_string(blocks_[k]);
  return s;
}

}  // namespace cryst
