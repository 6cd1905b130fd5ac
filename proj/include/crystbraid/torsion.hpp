#pragma once

#include <optional>
#include <vector>

#include "crystbraid/block_spec.hpp"
#include "crystbraid/braid_word.hpp"
#include "crystbraid/quotient.hpp"

namespace cryst {

/// sigma_{r+1} ... sigma_{r+k-1}
BraidWord alpha_word(int r, int k, int n);
/// sigma_{r+k-1} ... sigma_{r+(k+1)/2} sigma_{r+(k-1)/2}^{-1} ... sigma_{r+1}^{-1}, k odd
BraidWord delta_word(int r, int k, int n);
/// Product of the delta blocks at consecutive offsets.
BraidWord delta_composite_word(const BlockSpec& spec);

Element alpha(int r, int k, int n);
/// Order-k torsion element supported on strands r+1..r+k.
Element delta_block(int r, int k, int n);
/// Order lcm(blocks) element with permutation spec.theta().
Element delta_composite(const BlockSpec& spec);

/// True iff A * delta(spec) has order lcm(blocks): the coefficients of A sum
/// to zero over every conjugation orbit of delta(spec).
bool finite_order_candidates(const BlockSpec& spec, const PairVector& a);

/// N * alpha_{0,n} of order n, with N = -A_{1,1+i} for i = 1..(n-1)/2.
Element order_n_element(int n);

/// For p != id, a vector N with N * L(p) of order order(p), or nullopt when
/// every lift of p has infinite order.
std::optional<PairVector> torsion_witness(const Permutation& p);
/// N * L(p)
Element lift_with_correction(const Permutation& p, const PairVector& correction);

/// Pairwise commuting delta blocks at consecutive offsets, one per block.
std::vector<Element> abelian_realization(const BlockSpec& spec);

}  // namespace cryst
