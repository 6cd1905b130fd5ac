#include "crystbraid/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crystbraid/errors.hpp"
#include "crystbraid/torsion.hpp"

namespace cryst {

IntMatrix holonomy_matrix(const Permutation& p) {
  const int n = p.degree();
  const auto d = static_cast<std::size_t>(pair_count(n));
  const Permutation pinv = p.inverse();
  IntMatrix m(d, d);
  for (const Pair& pair : all_pairs(n)) m(pair_index(n, pair_action(pinv, pair)), pair_index(n, pair)) = 1;
  return m;
}

int pair_sign(const Permutation& p) {
  int transpositions = 0;
  for (const auto& orbit : pair_orbits(p)) transpositions += static_cast<int>(orbit.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

bool faithfulness_check(int n) {
  if (n < 3) throw DomainError("faithfulness needs n >= 3; for n = 2 the transposition fixes the only pair");
  // A permutation fixing every 2-subset fixes every point once n >= 3, since
  // {i} is the intersection of two pairs through i.
  if (n > 7) return true;
  for (const Permutation& p : all_permutations(n)) {
    if (p.is_identity()) continue;
    const auto pairs = all_pairs(n);
    if (std::all_of(pairs.begin(), pairs.end(), [&](const Pair& q) { return pair_action(p, q) == q; })) return false;
  }
  return true;
}

HolonomySubgroup::HolonomySubgroup(int n, std::vector<Permutation> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != n_) throw DegreeMismatch(g.degree(), n_);
  std::set<Permutation> seen{Permutation(n_)};
  elements_.push_back(Permutation(n_));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& g : generators_) {
      Permutation next = elements_[k] * g;
      if (seen.insert(next).second) elements_.push_back(std::move(next));
    }
  }
}

bool HolonomySubgroup::contains(const Permutation& p) const {
  return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

PreimageSubgroup preimage_subgroup(const HolonomySubgroup& h) {
  PreimageSubgroup out{h, static_cast<std::size_t>(pair_count(h.degree())), {}};
  for (const auto& g : h.generators()) out.generator_matrices.push_back(holonomy_matrix(g));
  return out;
}

Abelianization preimage_abelianization(const HolonomySubgroup& h) {
  const int n = h.degree();
  const auto& gens = h.generators();
  const std::size_t s = gens.size();
  const auto pairs = all_pairs(n);
  const std::size_t cols = s + pairs.size();

  std::vector<Element> lifts;
  for (const auto& g : gens) lifts.push_back(normalize(canonical_lift(g)));

  // Spanning tree of the Cayley graph: each element's lift is the product of
  // generator lifts along its tree path; exps counts those generators.
  std::map<Permutation, std::size_t> index;
  std::vector<Element> tree_lift{Element::identity(n)};
  std::vector<std::vector<std::int64_t>> exps{std::vector<std::int64_t>(s, 0)};
  index.emplace(Permutation(n), 0);
  for (std::size_t k = 0; k < tree_lift.size(); ++k) {
    for (std::size_t g = 0; g < s; ++g) {
      const Permutation next = tree_lift[k].perm() * gens[g];
      if (index.count(next)) continue;
      index.emplace(next, tree_lift.size());
      tree_lift.push_back(mul(tree_lift[k], lifts[g]));
      exps.push_back(exps[k]);
      ++exps.back()[g];
    }
  }

  std::set<std::vector<std::int64_t>> rows;
  for (std::size_t k = 0; k < tree_lift.size(); ++k) {
    for (std::size_t g = 0; g < s; ++g) {
      const std::size_t target = index.at(tree_lift[k].perm() * gens[g]);
      const PairVector w = mul(mul(tree_lift[k], lifts[g]), inv(tree_lift[target])).vec();
      std::vector<std::int64_t> row(cols, 0);
      for (std::size_t c = 0; c < s; ++c) row[c] = exps[k][c] - exps[target][c];
      ++row[g];
      for (std::size_t c = 0; c < pairs.size(); ++c) row[s + c] = -w.coeffs()[c];
      rows.insert(std::move(row));
    }
  }
  for (std::size_t g = 0; g < s; ++g) {
    for (const Pair& p : pairs) {
      std::vector<std::int64_t> row(cols, 0);
      row[s + pair_index(n, p)] += 1;
      row[s + pair_index(n, action_on_basis(lifts[g], p))] -= 1;
      rows.insert(std::move(row));
    }
  }

  std::vector<BigVector> big;
  for (const auto& r : rows) {
    if (std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; })) continue;
    big.emplace_back(r.begin(), r.end());
  }
  const IntMatrix basis = row_lattice_basis(big, cols);
  if (basis.rows() == 0) return {cols, {}};
  return abelianization(basis);
}

bool bieberbach_check(const HolonomySubgroup& h) {
  for (const auto& p : h.elements())
    if (!p.is_identity() && torsion_witness(p)) return false;
  return true;
}

SubgroupReport subgroup_report(const HolonomySubgroup& h) {
  SubgroupReport r;
  r.holonomy_order = h.order();
  r.bieberbach = bieberbach_check(h);
  std::set<int> dets;
  for (const auto& p : h.elements()) dets.insert(pair_sign(p));
  r.det_spectrum.assign(dets.begin(), dets.end());
  r.abelianization = preimage_abelianization(h);
  return r;
}

namespace {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

struct LatticeSetup {
  std::int64_t m;
  PairVector t;
  std::vector<PairVector> gens;  // lattice_gens followed by t
};

LatticeSetup prepare(const Element& g, const std::vector<PairVector>& lattice_gens) {
  const std::int64_t m = order(g.perm());
  if (!is_prime(m)) throw DomainError("coset representative must have prime-order permutation, got order " +
                                      std::to_string(m));
  LatticeSetup s{m, pow(g, m).vec(), lattice_gens};
  s.gens.push_back(s.t);
  for (const auto& v : s.gens)
    if (v.strands() != g.strands()) throw DegreeMismatch(v.strands(), g.strands());
  return s;
}

IntMatrix columns_of(const std::vector<PairVector>& vs, std::size_t d) {
  IntMatrix out(d, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) out(r, c) = vs[c].coeffs()[r];
  return out;
}

BigVector big_of(const PairVector& v) { return BigVector(v.coeffs().begin(), v.coeffs().end()); }

}  // namespace

SublatticeTorsion sublattice_torsion_check(const Element& g, const std::vector<PairVector>& lattice_gens) {
  const int n = g.strands();
  const auto d = static_cast<std::size_t>(pair_count(n));
  const LatticeSetup s = prepare(g, lattice_gens);
  const IntMatrix lambda = columns_of(s.gens, d);

  for (const auto& v : s.gens)
    if (!solve_integer(lambda, big_of(v.act(g.perm()))))
      throw DomainError("lattice is not invariant under conjugation by the coset representative");

  // Sum over the cyclic group generated by perm(g) of its action: on an orbit
  // of size q each coordinate becomes (m/q) times the orbit sum.
  IntMatrix orbit_sum(d, d);
  for (const auto& orbit : pair_orbits(g.perm()))
    for (const Pair& p : orbit)
      for (const Pair& q : orbit)
        orbit_sum(pair_index(n, p), pair_index(n, q)) = s.m / static_cast<std::int64_t>(orbit.size());
  const IntMatrix system = orbit_sum * lambda;

  for (std::int64_t j = 1; j < s.m; ++j) {
    BigVector rhs = big_of(s.t);
    for (auto& x : rhs) x *= -j;
    auto sol = solve_integer(system, rhs);
    if (!sol) continue;
    const BigVector theta_big = lambda * std::span<const BigInt>(sol->particular);
    std::vector<std::int64_t> theta(d);
    for (std::size_t k = 0; k < d; ++k) theta[k] = static_cast<std::int64_t>(theta_big[k]);
    const Element w = mul(Element::pure(PairVector(n, theta), g.section()), pow(g, j));
    if (!pow(w, s.m).is_identity()) throw std::logic_error("sublattice torsion witness failed verification");
    return {false, w};
  }
  return {true, std::nullopt};
}

SublatticeTorsion sublattice_torsion_brute_force(const Element& g, const std::vector<PairVector>& lattice_gens,
                                                 int bound) {
  const LatticeSetup s = prepare(g, lattice_gens);
  const std::size_t k = s.gens.size();
  std::vector<Element> powers;
  for (std::int64_t j = 1; j < s.m; ++j) powers.push_back(pow(g, j));

  std::vector<int> coord(k, -bound);
  while (true) {
    PairVector theta(g.strands());
    for (std::size_t c = 0; c < k; ++c) theta += static_cast<std::int64_t>(coord[c]) * s.gens[c];
    for (const auto& gj : powers) {
      const Element w = mul(Element::pure(theta, g.section()), gj);
      if (pow(w, s.m).is_identity()) return {false, w};
    }
    std::size_t c = 0;
    while (c < k && coord[c] == bound) coord[c++] = -bound;
    if (c == k) break;
    ++coord[c];
  }
  return {true, std::nullopt};
}

Element Presentation::evaluate(const Relator& r) const {
  if (values.empty()) throw DomainError("presentation has no generators");
  Element out = Element::identity(values.front().strands(), values.front().section());
  for (const auto& l : r) out = mul(out, pow(values.at(l.generator), l.exponent));
  return out;
}

IntMatrix Presentation::relation_matrix() const {
  IntMatrix m(relators.size(), names.size());
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const auto& l : relators[r]) m(r, l.generator) += l.exponent;
  return m;
}

std::string Presentation::relator_to_string(const Relator& r) const {
  std::string s;
  for (const auto& l : r) {
    if (!s.empty()) s += ' ';
    s += names.at(l.generator);
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s.empty() ? "1" : s;
}

namespace {

using Relator = Presentation::Relator;

Relator commutator(std::size_t a, std::size_t b) { return {{a, 1}, {b, 1}, {a, -1}, {b, -1}}; }

// g a g^{-1} b^{-1}
Relator conjugation(std::size_t g, std::size_t a, std::size_t b) { return {{g, 1}, {a, 1}, {g, -1}, {b, -1}}; }

CatalogEntry finish(std::string label, HolonomySubgroup h, Presentation pres) {
  CatalogEntry e{std::move(label), std::move(h), std::move(pres), {}, {}, {}, false, {}};
  for (const auto& r : e.presentation.relators) e.relators_hold.push_back(e.presentation.evaluate(r).is_identity());
  e.abelianization = abelianization(e.presentation.relation_matrix());
  const SubgroupReport rep = subgroup_report(e.holonomy);
  e.schreier_abelianization = rep.abelianization;
  e.bieberbach = rep.bieberbach;
  e.det_spectrum = rep.det_spectrum;
  return e;
}

}  // namespace

std::vector<CatalogEntry> b3_catalog() {
  const int n = 3;
  const Element a12 = Element::pure(PairVector::basis(n, Pair(1, 2)));
  const Element a13 = Element::pure(PairVector::basis(n, Pair(1, 3)));
  const Element a23 = Element::pure(PairVector::basis(n, Pair(2, 3)));
  const Element alpha03 = normalize(BraidWord::parse(n, "1 2"));
  const Element s1 = normalize(BraidWord::parse(n, "1"));
  const Element s2 = normalize(BraidWord::parse(n, "2"));
  std::vector<CatalogEntry> out;

  {
    Presentation p{{"A12", "A13", "A23"}, {a12, a13, a23}, {commutator(0, 1), commutator(0, 2), commutator(1, 2)}};
    out.push_back(finish("a", HolonomySubgroup(n, {}), std::move(p)));
  }
  {
    // generators A12, A23, A13, alpha
    Presentation p{{"A12", "A23", "A13", "alpha"}, {a12, a23, a13, alpha03}, {}};
    p.relators = {commutator(0, 2), commutator(0, 1), commutator(2, 1),
                  {{3, 3}, {1, -1}, {2, -1}, {0, -1}},
                  conjugation(3, 0, 1), conjugation(3, 2, 0), conjugation(3, 1, 2)};
    out.push_back(finish("b", HolonomySubgroup(n, {Permutation::parse(n, "(1,3,2)")}), std::move(p)));
  }
  {
    // generators A12, A23, A13, sigma1
    Presentation p{{"A12", "A23", "A13", "s1"}, {a12, a23, a13, s1}, {}};
    p.relators = {commutator(0, 2), commutator(0, 1), commutator(2, 1),
                  {{3, 2}, {0, -1}},
                  conjugation(3, 0, 0), conjugation(3, 2, 1), conjugation(3, 1, 2)};
    out.push_back(finish("c", HolonomySubgroup(n, {Permutation::parse(n, "(1,2)")}), std::move(p)));
  }
  {
    Presentation p{{"s1", "s2"}, {s1, s2}, {}};
    p.relators = {{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}},
                  {{0, -1}, {1, 1}, {0, -1}, {1, 1}, {0, -1}, {1, 1}}};
    out.push_back(finish("d", HolonomySubgroup(n, {Permutation::parse(n, "(1,2)"), Permutation::parse(n, "(2,3)")}),
                         std::move(p)));
  }
  return out;
}

}  // namespace cryst
