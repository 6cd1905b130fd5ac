#pragma once

#include <cstdint>
#include <random>

#include "crystbraid/block_spec.hpp"
#include "crystbraid/quotient.hpp"

namespace cryst {

using Rng = std::mt19937_64;

/// Generator for the index-th draw of a seeded stream. Each index gets its
/// own generator, so results do not depend on how work is split.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

BraidWord random_word(Rng& rng, int n, std::size_t length);
PairVector random_pair_vector(Rng& rng, int n, std::int64_t bound);
/// Random odd blocks with sum at most n; n >= 3.
BlockSpec random_block_spec(Rng& rng, int n);
/// A * delta(spec) with A summing to zero on every orbit, conjugated by a
/// random element. Always of order lcm(spec).
Element random_finite_order(Rng& rng, const BlockSpec& spec);

}  // namespace cryst
