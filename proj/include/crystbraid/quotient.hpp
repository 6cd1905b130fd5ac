#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystbraid/braid_word.hpp"
#include "crystbraid/permutation.hpp"

namespace cryst {

/// Deterministic positive lift of a permutation to a braid word. Normal forms
/// are taken relative to one of these; Forward is the default everywhere.
enum class Section {
  Forward,  ///< bubble sort scanning positions 1..n-1
  Reverse,  ///< bubble sort scanning positions n-1..1
};

/// Element of B_n/[P_n,P_n] in normal form A^vec * L(perm), where L is the
/// section and A^vec the product of A_{i,j}^{vec_{i,j}}.
class Element {
 public:
  Element() = default;
  Element(Permutation perm, PairVector vec, Section section = Section::Forward);

  static Element identity(int n, Section section = Section::Forward);
  static Element pure(PairVector vec, Section section = Section::Forward);

  int strands() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }
  const PairVector& vec() const { return vec_; }
  Section section() const { return section_; }

  bool is_pure() const { return perm_.is_identity(); }
  bool is_identity() const { return is_pure() && vec_.is_zero(); }

  /// "perm | {i,j}:coeff, ..."
  std::string to_string() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Permutation perm_;
  PairVector vec_;
  Section section_ = Section::Forward;
};

/// Positive word with permutation p and length equal to the inversion count.
BraidWord canonical_lift(const Permutation& p, Section section = Section::Forward);

Element normalize(const BraidWord& w, Section section = Section::Forward);

/// linking_vector(L(p) L(q) L(pq)^{-1})
PairVector cocycle(const Permutation& p, const Permutation& q, Section section = Section::Forward);

Element mul(const Element& g, const Element& h);
Element inv(const Element& g);
Element pow(const Element& g, std::int64_t m);
/// c g c^{-1}
Element conj(const Element& g, const Element& c);

inline Element operator*(const Element& g, const Element& h) { return mul(g, h); }

/// Finite order, or nullopt for infinite order.
using Order = std::optional<std::int64_t>;
Order element_order(const Element& g);
std::string to_string(const Order& o);

/// The pair P with g A_{i,j} g^{-1} = A_P.
Pair action_on_basis(const Element& g, const Pair& pair);

/// Re-expresses g relative to another section.
Element change_section(const Element& g, Section target);

/// Strict weak order on normal forms (perm images, then coefficients).
bool element_less(const Element& a, const Element& b);

/// Elements of the subgroup generated by gens, in breadth-first order from
/// the identity. Throws DomainError once more than `limit` elements appear.
std::vector<Element> generated_subgroup(const std::vector<Element>& gens, std::size_t limit = 100000);

/// Image under the standard inclusion B_n -> B_m (m >= n).
Element embed(const Element& g, int strands);

}  // namespace cryst
