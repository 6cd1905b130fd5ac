#include "crystbraid/sampling.hpp"

#include <algorithm>

#include "crystbraid/errors.hpp"
#include "crystbraid/torsion.hpp"

namespace cryst {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(splitmix64(seed) + index)); }

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BraidWord random_word(Rng& rng, int n, std::size_t length) {
  std::vector<int> letters;
  if (n < 2) return BraidWord(n);
  for (std::size_t k = 0; k < length; ++k) {
    const int gen = static_cast<int>(uniform_int(rng, 1, n - 1));
    letters.push_back(uniform_int(rng, 0, 1) ? gen : -gen);
  }
  return BraidWord(n, std::move(letters));
}

PairVector random_pair_vector(Rng& rng, int n, std::int64_t bound) {
  std::vector<std::int64_t> c(pair_count(n));
  for (auto& v : c) v = uniform_int(rng, -bound, bound);
  return PairVector(n, std::move(c));
}

BlockSpec random_block_spec(Rng& rng, int n) {
  if (n < 3) throw DomainError("block specs need n >= 3");
  std::vector<int> blocks;
  int left = n;
  do {
    const int max_part = left % 2 ? left : left - 1;
    const int part = 3 + 2 * static_cast<int>(uniform_int(rng, 0, (max_part - 3) / 2));
    blocks.push_back(part);
    left -= part;
  } while (left >= 3 && uniform_int(rng, 0, 1));
  std::sort(blocks.begin(), blocks.end());
  return BlockSpec(n, std::move(blocks));
}

Element random_finite_order(Rng& rng, const BlockSpec& spec) {
  const int n = spec.strands();
  PairVector a = random_pair_vector(rng, n, 3);
  for (const auto& orbit : pair_orbits(spec.theta())) {
    std::int64_t sum = 0;
    for (const Pair& p : orbit) sum += a[p];
    a[orbit.front()] -= sum;
  }
  const Element g = mul(Element::pure(a), delta_composite(spec));
  const Element c = mul(Element::pure(random_pair_vector(rng, n, 2)), normalize(random_word(rng, n, 6)));
  return conj(g, c);
}

}  // namespace cryst
