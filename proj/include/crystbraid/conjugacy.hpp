#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crystbraid/block_spec.hpp"
#include "crystbraid/quotient.hpp"

namespace cryst {

struct Standardization {
  Element conjugator;  ///< conj(g, conjugator) has permutation spec.theta()
  BlockSpec spec;
};

/// Conjugates a finite-order element so that its permutation is the block
/// permutation theta. Cycles of perm(g), ordered by (length, least point),
/// go to consecutive blocks. Throws InfiniteOrder.
Standardization standardize(const Element& g);

/// c with conj(g, c) = delta_composite(spec), where spec comes from
/// standardize(g). Throws InfiniteOrder.
Element conjugator_to_delta(const Element& g);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct ConjugacyResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Element> witness;  ///< conj(g, *witness) = h when Yes
};

/// Decides conjugacy of finite-order elements. Pairs involving an element of
/// infinite order that are not equal come back Unknown.
ConjugacyResult are_conjugate(const Element& g, const Element& h);

/// Number of multisets of odd parts >= 3 with sum <= n and lcm k.
std::int64_t count_classes(int n, std::int64_t k);

}  // namespace cryst
