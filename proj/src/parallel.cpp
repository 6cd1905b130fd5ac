#include "crystbraid/parallel.hpp"

#include <algorithm>

#include "crystbraid/conjugacy.hpp"
#include "crystbraid/frobenius.hpp"
#include "crystbraid/sampling.hpp"
#include "crystbraid/torsion.hpp"

namespace cryst::bulk {

namespace {

// One permutation of the dichotomy scan.
DichotomyTally dichotomy_item(int n, std::uint64_t rank) {
  DichotomyTally t;
  const Permutation p = permutation_from_rank(n, rank);
  if (p.is_identity()) return t;
  t.checked = 1;
  try {
    const std::int64_t m = order(p);
    const bool odd = m % 2 == 1;
    t.odd = odd;
    const auto w = torsion_witness(p);
    if (w) {
      t.witnessed = 1;
      if (element_order(lift_with_correction(p, *w)) != Order(m)) t.failures = 1;
    }
    if (w.has_value() != odd) t.failures = 1;
  } catch (const std::exception&) {
    t.failures = 1;
  }
  return t;
}

void add(DichotomyTally& a, const DichotomyTally& b) {
  a.checked += b.checked;
  a.odd += b.odd;
  a.witnessed += b.witnessed;
  a.failures += b.failures;
}

ConjugacyTally conjugacy_item(int n, std::uint64_t seed, std::uint64_t index) {
  ConjugacyTally t;
  t.pairs = 1;
  try {
    Rng rng = stream_rng(seed, index);
    const BlockSpec sg = random_block_spec(rng, n);
    const BlockSpec sh = uniform_int(rng, 0, 1) ? sg : random_block_spec(rng, n);
    const Element g = random_finite_order(rng, sg);
    const Element h = random_finite_order(rng, sh);
    const ConjugacyResult r = are_conjugate(g, h);
    const bool same_type = cycle_type(g.perm()) == cycle_type(h.perm());
    if (r.verdict == Verdict::Unknown || (r.verdict == Verdict::Yes) != same_type) t.failures = 1;
    if (r.verdict == Verdict::Yes) {
      t.conjugate = 1;
      if (r.witness && conj(g, *r.witness) == h)
        t.verified = 1;
      else
        t.failures = 1;
    }
  } catch (const std::exception&) {
    t.failures = 1;
  }
  return t;
}

void add(ConjugacyTally& a, const ConjugacyTally& b) {
  a.pairs += b.pairs;
  a.conjugate += b.conjugate;
  a.verified += b.verified;
  a.failures += b.failures;
}

FrobeniusTally frobenius_item(std::uint64_t seed, std::uint64_t index) {
  namespace fr = frobenius;
  FrobeniusTally t;
  t.samples = 1;
  try {
    Rng rng = stream_rng(seed, index);
    fr::Params r{};
    for (auto& v : r) v = uniform_int(rng, -3, 3);
    const fr::Witness w = fr::build_frobenius(fr::solution_n(r));
    if (!w.valid()) {
      t.failures = 1;
      return t;
    }
    t.certified = 1;

    // hide the subgroup behind a random conjugation before standardizing
    const Element c = mul(Element::pure(random_pair_vector(rng, fr::kStrands, 2)),
                          normalize(random_word(rng, fr::kStrands, 8)));
    const Element a = conj(w.x, c), b = conj(w.v, c);
    const auto rho_choice = static_cast<std::size_t>(uniform_int(rng, 0, 41));
    const auto twist = static_cast<int>(uniform_int(rng, 0, 2));
    const fr::Chain chain = fr::standardize_frobenius(a, b, rho_choice, twist);

    auto target = generated_subgroup({w.x, fr::v0()});
    auto image = generated_subgroup({conj(a, chain.total), conj(b, chain.total)});
    std::sort(target.begin(), target.end(), element_less);
    std::sort(image.begin(), image.end(), element_less);
    if (target.size() == 21 && image == target)
      t.standardized = 1;
    else
      t.failures = 1;
  } catch (const std::exception&) {
    t.failures = 1;
  }
  return t;
}

void add(FrobeniusTally& a, const FrobeniusTally& b) {
  a.samples += b.samples;
  a.certified += b.certified;
  a.standardized += b.standardized;
  a.failures += b.failures;
}

}  // namespace

DichotomyTally torsion_dichotomy_serial(int n) {
  DichotomyTally total;
  const std::uint64_t count = factorial(n);
  for (std::uint64_t k = 0; k < count; ++k) add(total, dichotomy_item(n, k));
  return total;
}

DichotomyTally torsion_dichotomy_parallel(int n) {
  const auto count = static_cast<std::int64_t>(factorial(n));
  std::uint64_t checked = 0, odd = 0, witnessed = 0, failures = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : checked, odd, witnessed, failures)
  for (std::int64_t k = 0; k < count; ++k) {
    const DichotomyTally t = dichotomy_item(n, static_cast<std::uint64_t>(k));
    checked += t.checked;
    odd += t.odd;
    witnessed += t.witnessed;
    failures += t.failures;
  }
  return {checked, odd, witnessed, failures};
}

ConjugacyTally conjugacy_sampling_serial(int n, std::uint64_t pairs, std::uint64_t seed) {
  ConjugacyTally total;
  for (std::uint64_t k = 0; k < pairs; ++k) add(total, conjugacy_item(n, seed, k));
  return total;
}

ConjugacyTally conjugacy_sampling_parallel(int n, std::uint64_t pairs, std::uint64_t seed) {
  std::uint64_t p = 0, conjugate = 0, verified = 0, failures = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : p, conjugate, verified, failures)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs); ++k) {
    const ConjugacyTally t = conjugacy_item(n, seed, static_cast<std::uint64_t>(k));
    p += t.pairs;
    conjugate += t.conjugate;
    verified += t.verified;
    failures += t.failures;
  }
  return {p, conjugate, verified, failures};
}

FrobeniusTally frobenius_sampling_serial(std::uint64_t samples, std::uint64_t seed) {
  FrobeniusTally total;
  for (std::uint64_t k = 0; k < samples; ++k) add(total, frobenius_item(seed, k));
  return total;
}

FrobeniusTally frobenius_sampling_parallel(std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t s = 0, certified = 0, standardized = 0, failures = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : s, certified, standardized, failures)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(samples); ++k) {
    const FrobeniusTally t = frobenius_item(seed, static_cast<std::uint64_t>(k));
    s += t.samples;
    certified += t.certified;
    standardized += t.standardized;
    failures += t.failures;
  }
  return {s, certified, standardized, failures};
}

}  // namespace cryst::bulk
