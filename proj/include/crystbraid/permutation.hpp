#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cryst {

/// Unordered pair {i,j} of 1-based points, stored with i < j.
struct Pair {
  int i = 1;
  int j = 2;

  Pair() = default;
  Pair(int a, int b);

  friend auto operator<=>(const Pair&, const Pair&) = default;
  friend bool operator==(const Pair&, const Pair&) = default;

  /// "i,j"
  std::string key() const;
  static Pair from_key(std::string_view key);
};

/// Number of unordered pairs of {1..n}.
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic 0-based index of {i,j} among the pairs of {1..n}.
int pair_index(int n, const Pair& p);
Pair pair_at(int n, int index);
std::vector<Pair> all_pairs(int n);

/// Bijection of {1..n}. Products are read left to right:
/// compose(p, q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);

  /// images[i-1] = image of i.
  static Permutation from_images(std::vector<int> images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b);
  /// Cycle notation "(1,3,2)(4,5,6)"; "()" is the identity.
  static Permutation parse(int n, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
Permutation power(const Permutation& p, std::int64_t m);

/// lcm of the cycle lengths.
std::int64_t order(const Permutation& p);

/// Multiset of nontrivial cycle lengths, sorted non-increasing.
struct CycleType {
  int n = 0;
  std::vector<int> parts;

  friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts == b.parts; }
  std::string to_string() const;
};

CycleType cycle_type(const Permutation& p);

/// {i,j} -> {p(i), p(j)}
Pair pair_action(const Permutation& p, const Pair& pair);

/// Cycles of P -> pair_action(p, P), each starting at its least pair and
/// sorted by that pair. Fixed pairs appear as singletons.
std::vector<std::vector<Pair>> pair_orbits(const Permutation& p);

/// The n! permutations of degree n in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);
/// Permutation of lexicographic rank `rank` (0 <= rank < n!).
Permutation permutation_from_rank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

}  // namespace cryst
