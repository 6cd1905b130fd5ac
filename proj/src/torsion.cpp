#include "crystbraid/torsion.hpp"

#include <algorithm>

#include "crystbraid/errors.hpp"

namespace cryst {

namespace {

void check_block_range(int r, int k, int n) {
  if (r < 0 || k < 2 || r + k > n)
    throw RangeError("block r=" + std::to_string(r) + " k=" + std::to_string(k) + " does not fit in n=" +
                     std::to_string(n));
}

}  // namespace

BraidWord alpha_word(int r, int k, int n) {
  check_block_range(r, k, n);
  std::vector<int> letters;
  for (int i = r + 1; i <= r + k - 1; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord delta_word(int r, int k, int n) {
  check_block_range(r, k, n);
  if (k < 3 || k % 2 == 0) throw DomainError("delta needs odd k >= 3, got " + std::to_string(k));
  std::vector<int> letters;
  for (int i = r + k - 1; i >= r + (k + 1) / 2; --i) letters.push_back(i);
  for (int i = r + (k - 1) / 2; i >= r + 1; --i) letters.push_back(-i);
  return BraidWord(n, std::move(letters));
}

BraidWord delta_composite_word(const BlockSpec& spec) {
  BraidWord w(spec.strands());
  for (int r = 1; r <= spec.count(); ++r) w = concat(w, delta_word(spec.offset(r), spec.size(r), spec.strands()));
  return w;
}

Element alpha(int r, int k, int n) { return normalize(alpha_word(r, k, n)); }

Element delta_block(int r, int k, int n) { return normalize(delta_word(r, k, n)); }

Element delta_composite(const BlockSpec& spec) { return normalize(delta_composite_word(spec)); }

bool finite_order_candidates(const BlockSpec& spec, const PairVector& a) {
  if (a.strands() != spec.strands()) throw DegreeMismatch(a.strands(), spec.strands());
  for (const auto& orbit : pair_orbits(spec.theta())) {
    std::int64_t sum = 0;
    for (const Pair& p : orbit) sum += a[p];
    if (sum != 0) return false;
  }
  return true;
}

Element order_n_element(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("order_n_element needs odd n >= 3, got " + std::to_string(n));
  PairVector nvec(n);
  for (int i = 1; i <= (n - 1) / 2; ++i) nvec[Pair(1, 1 + i)] = -1;
  return mul(Element::pure(nvec), alpha(0, n, n));
}

std::optional<PairVector> torsion_witness(const Permutation& p) {
  if (p.is_identity()) throw DomainError("torsion_witness needs a non-identity permutation");
  const int n = p.degree();
  const std::int64_t m = order(p);
  const Element lift = normalize(canonical_lift(p));
  const PairVector t = pow(lift, m).vec();

  PairVector witness(n);
  for (const auto& orbit : pair_orbits(p)) {
    const auto q = static_cast<std::int64_t>(orbit.size());
    const std::int64_t value = t[orbit.front()];
    if (value % (m / q) != 0) return std::nullopt;
    witness[orbit.front()] = -value * q / m;
  }
  if (!pow(lift_with_correction(p, witness), m).is_identity())
    throw std::logic_error("torsion witness failed verification for " + p.to_string());
  return witness;
}

Element lift_with_correction(const Permutation& p, const PairVector& correction) {
  return Element(p, correction);
}

std::vector<Element> abelian_realization(const BlockSpec& spec) {
  std::vector<Element> out;
  for (int r = 1; r <= spec.count(); ++r) out.push_back(delta_block(spec.offset(r), spec.size(r), spec.strands()));
  return out;
}

}  // namespace cryst
