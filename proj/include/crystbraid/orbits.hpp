#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystbraid/block_spec.hpp"
#include "crystbraid/quotient.hpp"

namespace cryst {

using Orbit = std::vector<Pair>;

/// Partition of the pairs of {1..n} into cycles of a conjugation action.
/// Canonical form: each orbit starts at its least pair and follows the
/// action; orbits are sorted by their first pair.
struct OrbitTable {
  int n = 0;
  std::optional<Element> element;
  std::vector<Orbit> orbits;

  void canonicalize();
  /// Orbit lengths, sorted non-increasing.
  std::vector<std::size_t> lengths() const;
  /// Every pair appears exactly once.
  bool is_partition() const;
  /// One orbit per line, "{1,2} -> {2,3} -> {1,3}".
  std::string to_string() const;

  friend bool operator==(const OrbitTable& a, const OrbitTable& b) {
    return a.n == b.n && a.orbits == b.orbits;
  }
};

/// Cycles of P -> action_on_basis(g, P).
OrbitTable enumerate_orbits(const Element& g);

/// The orbits of conjugation by delta_composite(spec), built from the
/// closed-form index formulas alone.
OrbitTable closed_form_orbits(const BlockSpec& spec);

/// The orbits of conjugation by alpha_{0,n}: floor((n-1)/2) orbits
/// A_{1,j+1} -> A_{2,j+2} -> ... of length n, plus A_{1,(n+2)/2} -> ... of
/// length n/2 for even n. Listed in the formula's own order.
std::vector<Orbit> alpha_orbit_formula(int n);

/// e_{i,j} = A_{j,i+j} if i+j <= n, else A_{i+j-n,j}; n odd, 1 <= i <= (n-1)/2.
Pair alpha_basis_pair(int n, int i, int j);

/// Basis label of a pair relative to a block spec.
///   a: (r, h, t)    pairs inside block r
///   b: (r, j, t)    block r against a free strand j
///   c: (p, q, v, t) block p against block q
///   d: (i, j)       two free strands
struct BasisLabel {
  char type = 'd';
  std::vector<int> indices;

  std::string to_string() const;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class RelabeledBasis {
 public:
  RelabeledBasis(int n, std::vector<std::pair<BasisLabel, Pair>> entries);

  const std::vector<std::pair<BasisLabel, Pair>>& entries() const { return entries_; }
  Pair pair_of(const BasisLabel& label) const;
  BasisLabel label_of(const Pair& pair) const;

 private:
  int n_;
  std::vector<std::pair<BasisLabel, Pair>> entries_;
  std::vector<std::size_t> by_pair_;
};

RelabeledBasis relabeled_basis(const BlockSpec& spec);

}  // namespace cryst
