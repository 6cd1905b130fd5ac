#include "crystbraid/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "crystbraid/errors.hpp"

namespace cryst {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return value;
}

}  // namespace

Pair::Pair(int a, int b) {
  if (a == b) throw RangeError("pair needs two distinct points");
  i = std::min(a, b);
  j = std::max(a, b);
}

std::string Pair::key() const { return std::to_string(i) + "," + std::to_string(j); }

Pair Pair::from_key(std::string_view key) {
  auto comma = key.find(',');
  if (comma == std::string_view::npos) throw ParseError("pair key must be 'i,j'");
  return Pair(parse_int(key.substr(0, comma)), parse_int(key.substr(comma + 1)));
}

int pair_index(int n, const Pair& p) {
  if (p.i < 1 || p.j > n) throw RangeError("pair {" + p.key() + "} out of range for n=" + std::to_string(n));
  return (p.i - 1) * (2 * n - p.i) / 2 + (p.j - p.i) - 1;
}

Pair pair_at(int n, int index) {
  if (index < 0 || index >= pair_count(n)) throw RangeError("pair index out of range");
  int i = 1;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return Pair(i, i + 1 + index);
}

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  out.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

Permutation::Permutation(int n) : images_(n) {
  if (n < 0) throw RangeError("negative degree");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) throw DomainError("images do not form a bijection of {1..n}");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1 || v > n) throw RangeError("cycle point " + std::to_string(v) + " out of range");
      if (used[v]) throw DomainError("cycles are not disjoint");
      used[v] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p.images_[c[k] - 1] = c[(k + 1) % c.size()];
  }
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) { return from_cycles(n, {{a, b}}); }

Permutation Permutation::parse(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle");
    auto body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    if (body.find_first_not_of(' ') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto comma = body.find(',', start);
        cycle.push_back(parse_int(body.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip_ws();
  }
  return from_cycles(n, cycles);
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > degree()) throw RangeError("point out of range");
  return images_[point - 1];
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (int i = 0; i < degree(); ++i) inv.images_[images_[i] - 1] = i + 1;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = images_[v - 1]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = q.images()[p.images()[i] - 1];
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, std::int64_t m) {
  Permutation base = m < 0 ? p.inverse() : p;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
  Permutation result(p.degree());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::int64_t order(const Permutation& p) {
  std::int64_t m = 1;
  for (const auto& c : p.cycles()) m = std::lcm(m, static_cast<std::int64_t>(c.size()));
  return m;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ']';
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  ct.n = p.degree();
  for (const auto& c : p.cycles()) ct.parts.push_back(static_cast<int>(c.size()));
  std::sort(ct.parts.begin(), ct.parts.end(), std::greater<>());
  return ct;
}

Pair pair_action(const Permutation& p, const Pair& pair) {
  if (pair.i < 1 || pair.j > p.degree()) throw RangeError("pair {" + pair.key() + "} out of range");
  return Pair(p(pair.i), p(pair.j));
}

std::vector<std::vector<Pair>> pair_orbits(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(pair_count(n), 0);
  std::vector<std::vector<Pair>> out;
  for (const Pair& start : all_pairs(n)) {
    if (seen[pair_index(n, start)]) continue;
    std::vector<Pair> orbit;
    Pair cur = start;
    do {
      seen[pair_index(n, cur)] = 1;
      orbit.push_back(cur);
      cur = pair_action(p, cur);
    } while (cur != start);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation permutation_from_rank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw RangeError("permutation rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace cryst
