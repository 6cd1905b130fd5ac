#include "crystbraid/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crystbraid/errors.hpp"
#include "crystbraid/orbits.hpp"
#include "crystbraid/torsion.hpp"

namespace cryst {

Standardization standardize(const Element& g) {
  if (!element_order(g)) throw InfiniteOrder();
  const int n = g.strands();
  auto cycles = g.perm().cycles();
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });

  // psi sends block position offset+t to the t-th point of the matching cycle.
  std::vector<int> psi;
  std::vector<char> moved(n + 1, 0);
  std::vector<int> blocks;
  for (const auto& c : cycles) {
    blocks.push_back(static_cast<int>(c.size()));
    for (int a : c) {
      psi.push_back(a);
      moved[a] = 1;
    }
  }
  for (int a = 1; a <= n; ++a)
    if (!moved[a]) psi.push_back(a);

  if (blocks.empty()) throw DomainError("the identity has no block form");
  const auto perm = Permutation::from_images(psi);
  return {normalize(canonical_lift(perm, g.section()), g.section()), BlockSpec(n, std::move(blocks))};
}

Element conjugator_to_delta(const Element& g) {
  if (g.is_identity()) return Element::identity(g.strands(), g.section());
  auto [c, spec] = standardize(g);
  const Element g1 = conj(g, c);
  const Element delta = change_section(delta_composite(spec), g.section());
  const PairVector a = mul(g1, inv(delta)).vec();

  PairVector x(g.strands());
  for (const auto& orbit : enumerate_orbits(delta).orbits) {
    // x_q = 0, x_{i-1} = x_i + m_i
    std::int64_t acc = 0;
    for (std::size_t i = orbit.size(); i >= 2; --i) {
      acc += a[orbit[i - 1]];
      x[orbit[i - 2]] = acc;
    }
  }
  const Element result = mul(Element::pure(x, g.section()), c);
  if (conj(g, result) != delta) throw std::logic_error("conjugator to delta failed verification");
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: break;
  }
  return "unknown";
}

ConjugacyResult are_conjugate(const Element& g, const Element& h) {
  if (g.strands() != h.strands()) throw DegreeMismatch(g.strands(), h.strands());
  if (g == h) return {Verdict::Yes, Element::identity(g.strands(), g.section())};
  if (!element_order(g) || !element_order(h)) return {Verdict::Unknown, std::nullopt};
  if (!(cycle_type(g.perm()) == cycle_type(h.perm()))) return {Verdict::No, std::nullopt};
  if (g.is_identity() || h.is_identity()) return {Verdict::No, std::nullopt};

  const Element w = mul(inv(conjugator_to_delta(h)), conjugator_to_delta(g));
  if (conj(g, w) != h) throw std::logic_error("conjugacy witness failed verification");
  return {Verdict::Yes, w};
}

std::int64_t count_classes(int n, std::int64_t k) {
  if (k < 3 || k % 2 == 0) throw DomainError("count_classes needs odd k >= 3");
  std::int64_t count = 0;
  // parts chosen non-decreasing from `min_part`
  std::function<void(int, int, std::int64_t, bool)> walk = [&](int min_part, int remaining, std::int64_t l, bool any) {
    if (any && l == k) ++count;
    for (int part = min_part; part <= remaining; part += 2) {
      const std::int64_t nl = std::lcm(l, static_cast<std::int64_t>(part));
      if (k % nl != 0) continue;
      walk(part, remaining - part, nl, true);
    }
  };
  walk(3, n, 1, false);
  return count;
}

}  // namespace cryst
