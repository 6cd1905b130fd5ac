#include "crystbraid/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "crystbraid/errors.hpp"

namespace cryst {

Element::Element(Permutation perm, PairVector vec, Section section)
    : perm_(std::move(perm)), vec_(std::move(vec)), section_(section) {
  if (perm_.degree() != vec_.strands()) throw DegreeMismatch(perm_.degree(), vec_.strands());
}

Element Element::identity(int n, Section section) { return Element(Permutation(n), PairVector(n), section); }

Element Element::pure(PairVector vec, Section section) {
  const int n = vec.strands();
  return Element(Permutation(n), std::move(vec), section);
}

std::string Element::to_string() const { return perm_.to_string() + " | " + vec_.to_string(); }

BraidWord canonical_lift(const Permutation& p, Section section) {
  const int n = p.degree();
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  std::vector<int> letters;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int step = 0; step + 1 < n; ++step) {
      const int pos = section == Section::Forward ? step : n - 2 - step;
      // Strand at[pos] must end left of strand at[pos + 1].
      if (p(at[pos]) > p(at[pos + 1])) {
        std::swap(at[pos], at[pos + 1]);
        letters.push_back(pos + 1);
        swapped = true;
      }
    }
  }
  return BraidWord(std::max(n, 1), std::move(letters));
}

Element normalize(const BraidWord& w, Section section) {
  Permutation pi = underlying_permutation(w);
  PairVector vec = linking_vector(concat(w, invert(canonical_lift(pi, section))));
  return Element(std::move(pi), std::move(vec), section);
}

PairVector cocycle(const Permutation& p, const Permutation& q, Section section) {
  BraidWord w = concat(canonical_lift(p, section), canonical_lift(q, section));
  return linking_vector(concat(w, invert(canonical_lift(compose(p, q), section))));
}

namespace {

void check_compatible(const Element& g, const Element& h) {
  if (g.strands() != h.strands()) throw DegreeMismatch(g.strands(), h.strands());
  if (g.section() != h.section()) throw DomainError("elements use different sections");
}

}  // namespace

Element mul(const Element& g, const Element& h) {
  check_compatible(g, h);
  // A^u L(p) A^v L(q) = A^{u + rho(p) v} [L(p) L(q) L(pq)^{-1}] L(pq)
  PairVector vec = g.vec() + h.vec().act(g.perm());
  if (!g.is_pure() && !h.is_pure()) vec += cocycle(g.perm(), h.perm(), g.section());
  return Element(compose(g.perm(), h.perm()), std::move(vec), g.section());
}

Element inv(const Element& g) {
  // (A^u L)^{-1} = (L^{-1} A^{-u} L) L^{-1}
  const Permutation pinv = g.perm().inverse();
  Element lift_inverse = normalize(invert(canonical_lift(g.perm(), g.section())), g.section());
  return mul(Element::pure((-g.vec()).act(pinv), g.section()), lift_inverse);
}

Element pow(const Element& g, std::int64_t m) {
  Element base = m < 0 ? inv(g) : g;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
  Element result = Element::identity(g.strands(), g.section());
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Element conj(const Element& g, const Element& c) { return mul(mul(c, g), inv(c)); }

Order element_order(const Element& g) {
  const std::int64_t k = order(g.perm());
  // g^k is pure with some vector u and g^{km} has vector m u, so a nonzero u
  // means infinite order; a finite order always equals k.
  if (pow(g, k).is_identity()) return k;
  return std::nullopt;
}

std::string to_string(const Order& o) { return o ? std::to_string(*o) : std::string("infinite"); }

Pair action_on_basis(const Element& g, const Pair& pair) { return pair_action(g.perm().inverse(), pair); }

Element change_section(const Element& g, Section target) {
  if (g.section() == target) return g;
  // A^u L_old(p) = A^u (L_old(p) L_new(p)^{-1}) L_new(p)
  BraidWord bridge = concat(canonical_lift(g.perm(), g.section()), invert(canonical_lift(g.perm(), target)));
  return Element(g.perm(), g.vec() + linking_vector(bridge), target);
}

Element embed(const Element& g, int strands) {
  const int n = g.strands();
  if (strands < n) throw RangeError("cannot embed into fewer strands");
  std::vector<int> images = g.perm().images();
  for (int k = n + 1; k <= strands; ++k) images.push_back(k);
  PairVector vec(strands);
  for (const Pair& p : all_pairs(n)) vec[p] = g.vec()[p];
  // Bubble-sort lifts of permutations fixing n+1..m ignore the extra strands,
  // so coordinates carry over unchanged for either section.
  return Element(Permutation::from_images(std::move(images)), std::move(vec), g.section());
}

bool element_less(const Element& a, const Element& b) {
  if (a.perm() != b.perm()) return a.perm() < b.perm();
  const auto ca = a.vec().coeffs(), cb = b.vec().coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<Element> generated_subgroup(const std::vector<Element>& gens, std::size_t limit) {
  if (gens.empty()) throw DomainError("generated_subgroup needs at least one generator");
  std::set<Element, decltype(&element_less)> seen(&element_less);
  std::vector<Element> out{Element::identity(gens.front().strands(), gens.front().section())};
  seen.insert(out.front());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Element next = mul(out[k], g);
      if (!seen.insert(next).second) continue;
      out.push_back(std::move(next));
      if (out.size() > limit) throw DomainError("subgroup exceeds " + std::to_string(limit) + " elements");
    }
  }
  return out;
}

}  // namespace cryst
