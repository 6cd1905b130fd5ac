#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crystbraid/permutation.hpp"

namespace cryst {

/// Integer vector indexed by the unordered pairs {i,j} of {1..n} in
/// lexicographic order. Coordinates are exponents of the basis A_{i,j} of
/// the abelianized pure braid group.
class PairVector {
 public:
  PairVector() = default;
  explicit PairVector(int n);
  PairVector(int n, std::vector<std::int64_t> coeffs);

  static PairVector basis(int n, const Pair& p);
  /// Built from (pair, coefficient) entries; repeated pairs accumulate.
  static PairVector from_entries(int n, const std::vector<std::pair<Pair, std::int64_t>>& entries);

  int strands() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  std::int64_t operator[](const Pair& p) const { return coeffs_[pair_index(n_, p)]; }
  std::int64_t& operator[](const Pair& p) { return coeffs_[pair_index(n_, p)]; }
  std::int64_t at(int i, int j) const { return (*this)[Pair(i, j)]; }

  bool is_zero() const;

  PairVector& operator+=(const PairVector& o);
  PairVector& operator-=(const PairVector& o);
  friend PairVector operator+(PairVector a, const PairVector& b) { return a += b; }
  friend PairVector operator-(PairVector a, const PairVector& b) { return a -= b; }
  PairVector operator-() const;
  friend PairVector operator*(std::int64_t k, PairVector v);

  /// rho(pi)(v): coordinate Q is v at pair_action(pi, Q). This is the
  /// effect on vectors of conjugating by any lift of pi.
  PairVector act(const Permutation& pi) const;

  /// "{1,2}:1, {2,7}:-1"; "0" for the zero vector.
  std::string to_string() const;

  friend bool operator==(const PairVector&, const PairVector&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Word in the Artin generators: letter +k is sigma_k, -k is sigma_k^{-1}.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n, std::vector<int> letters = {});

  /// Whitespace-separated nonzero integers, e.g. "2 -1 5 -4".
  static BraidWord parse(int n, std::string_view text);

  int strands() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
/// Deletes adjacent (k, -k) pairs until none remain.
BraidWord free_reduce(const BraidWord& w);
/// Same letters in n' >= n strands.
BraidWord embed(const BraidWord& w, int strands);

Permutation underlying_permutation(const BraidWord& w);

/// Image of a pure word in P_n/[P_n,P_n]: half the signed crossing count of
/// every strand pair, strands labelled by their starting positions. Throws
/// NotPure for non-pure words.
PairVector linking_vector(const BraidWord& w);

}  // namespace cryst
