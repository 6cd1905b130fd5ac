#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystbraid/quotient.hpp"
#include "crystbraid/zlinalg.hpp"

namespace cryst {

/// Matrix of v -> v.act(p) in the lexicographic pair basis: column P holds the
/// image of e_P, which is e_Q with Q = p^{-1}(P). M(p*q) = M(p) M(q).
IntMatrix holonomy_matrix(const Permutation& p);

/// Sign of the permutation p induces on pairs; equals det(holonomy_matrix(p)).
int pair_sign(const Permutation& p);

/// True iff only the identity of S_n fixes every pair. Exhaustive for n <= 7.
bool faithfulness_check(int n);

/// Subgroup of S_n given by generators, with its elements enumerated by
/// closure in breadth-first order from the identity.
class HolonomySubgroup {
 public:
  HolonomySubgroup(int n, std::vector<Permutation> generators);

  int degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

 private:
  int n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// The crystallographic group sigma^{-1}(H) / [P_n, P_n].
struct PreimageSubgroup {
  HolonomySubgroup holonomy;
  std::size_t lattice_rank = 0;
  std::vector<IntMatrix> generator_matrices;

  bool contains(const Element& g) const { return holonomy.contains(g.perm()); }
};
PreimageSubgroup preimage_subgroup(const HolonomySubgroup& h);

/// Abelianization of sigma^{-1}(H) / [P_n, P_n], from the Schreier relations
/// of the Cayley graph of H together with the lattice action.
Abelianization preimage_abelianization(const HolonomySubgroup& h);

/// True iff no non-identity element of H lifts to a torsion element.
bool bieberbach_check(const HolonomySubgroup& h);

struct SubgroupReport {
  std::size_t holonomy_order = 0;
  bool bieberbach = false;
  std::vector<int> det_spectrum;  ///< distinct determinants over H, ascending
  Abelianization abelianization;
};
SubgroupReport subgroup_report(const HolonomySubgroup& h);

struct SublatticeTorsion {
  bool torsion_free = true;
  /// theta * g^j of order m, when one exists.
  std::optional<Element> witness;
};

/// L = <g, L1> with L1 spanned by lattice_gens and g^m, m = order(perm(g))
/// prime. Decides whether L has torsion by solving, for each j < m, the
/// orbit-sum equation S(theta) = -j * vec(g^m) over theta in L1. Throws
/// DomainError if m is not prime or L1 is not invariant under perm(g).
SublatticeTorsion sublattice_torsion_check(const Element& g, const std::vector<PairVector>& lattice_gens);

/// Same question by enumerating theta with generator coordinates in
/// [-bound, bound].
SublatticeTorsion sublattice_torsion_brute_force(const Element& g, const std::vector<PairVector>& lattice_gens,
                                                 int bound);

/// Finite presentation over named generators, each realized as an element.
struct Presentation {
  struct Letter {
    std::size_t generator;
    int exponent;
  };
  using Relator = std::vector<Letter>;

  std::vector<std::string> names;
  std::vector<Element> values;
  std::vector<Relator> relators;

  Element evaluate(const Relator& r) const;
  /// Rows are relators, columns generator exponent sums.
  IntMatrix relation_matrix() const;
  std::string relator_to_string(const Relator& r) const;
};

struct CatalogEntry {
  std::string label;  ///< "a".."d"
  HolonomySubgroup holonomy;
  Presentation presentation;
  std::vector<bool> relators_hold;
  Abelianization abelianization;           ///< from the presentation
  Abelianization schreier_abelianization;  ///< from preimage_abelianization
  bool bieberbach = false;
  std::vector<int> det_spectrum;
};

/// The four subgroups of S_3 up to conjugacy: trivial, <(1,3,2)>, <(1,2)>, S_3.
std::vector<CatalogEntry> b3_catalog();

}  // namespace cryst
