#include "crystbraid/frobenius.hpp"

#include <algorithm>
#include <set>

#include "crystbraid/conjugacy.hpp"
#include "crystbraid/errors.hpp"

namespace cryst::frobenius {

namespace {

constexpr int n = kStrands;

PairVector from_big(const BigVector& v) {
  std::vector<std::int64_t> c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c[k] = static_cast<std::int64_t>(v[k]);
  return PairVector(n, std::move(c));
}

BigVector to_big(const PairVector& v) { return BigVector(v.coeffs().begin(), v.coeffs().end()); }

std::size_t idx(int i, int j) { return static_cast<std::size_t>(pair_index(n, Pair(i, j))); }

struct ParamRow {
  int i, j;
  std::int64_t constant;
  std::array<std::int64_t, 6> r;
};

// p_{i,j} = constant + sum_l r[l] * r_{l+1}
const std::vector<ParamRow>& parametrization() {
  static const std::vector<ParamRow> rows = {
      {1, 2, 1, {0, -1, 1, 1, 0, -1}},   {1, 3, 0, {0, -1, 0, 0, 0, -1}},  {4, 7, 0, {0, 1, -1, 0, 0, 1}},
      {1, 7, 0, {0, 1, -1, -1, -1, 1}},  {3, 6, 0, {0, -1, 1, 0, 0, 0}},   {6, 7, 0, {0, 0, 0, 1, 1, 0}},
      {1, 5, 0, {0, 1, 0, 0, 0, 0}},     {5, 6, 0, {-1, -1, 1, 0, 0, -1}}, {2, 7, -1, {0, 0, -1, -1, -1, 0}},
      {2, 5, 0, {1, 0, 0, 0, 0, 1}},     {4, 6, 0, {-1, -1, 1, 1, 1, -1}}, {2, 4, -1, {0, 1, -1, -1, 0, 0}},
      {3, 5, 0, {1, 1, -1, -1, 0, 1}},   {3, 4, 1, {0, 0, 1, 1, 0, 0}},    {1, 4, 0, {0, 0, 0, 0, 0, 1}},
      {2, 6, 0, {0, 0, 1, 0, 0, 0}},     {3, 7, 0, {0, 1, -1, -1, -1, 0}}, {4, 5, 0, {-1, -1, 0, 0, 0, -1}},
      {1, 6, 0, {0, 0, 0, 0, 1, 0}},     {2, 3, 0, {1, 0, 0, 0, 0, 0}},    {5, 7, 0, {0, 0, 0, 1, 0, 0}},
  };
  return rows;
}

struct CoefficientRow {
  Pair minus, plus1, plus2;
  std::int64_t rhs;
};

// -p_minus + p_plus1 + p_plus2 = rhs, one row per basis element A_{i,j}
const std::vector<CoefficientRow>& coefficient_rows() {
  static const std::vector<CoefficientRow> rows = {
      {{2, 3}, {1, 2}, {3, 5}, 1},  {{1, 2}, {1, 3}, {3, 4}, 0},  {{5, 7}, {4, 7}, {1, 2}, 1},
      {{2, 7}, {1, 7}, {1, 3}, 1},  {{1, 4}, {3, 6}, {4, 7}, 0},  {{4, 7}, {6, 7}, {1, 7}, 0},
      {{2, 6}, {1, 5}, {3, 6}, 0},  {{4, 6}, {5, 6}, {6, 7}, 0},  {{3, 7}, {2, 7}, {1, 5}, -1},
      {{3, 6}, {2, 5}, {5, 6}, 0},  {{4, 5}, {4, 6}, {2, 7}, -1}, {{3, 5}, {2, 4}, {2, 5}, -1},
      {{1, 6}, {3, 5}, {4, 6}, 0},  {{1, 5}, {3, 4}, {2, 4}, 0},  {{2, 5}, {1, 4}, {2, 3}, 0},
      {{3, 4}, {2, 6}, {5, 7}, -1}, {{1, 7}, {3, 7}, {1, 4}, 0},  {{5, 6}, {4, 5}, {2, 6}, 0},
      {{2, 4}, {1, 6}, {3, 7}, 1},  {{1, 3}, {2, 3}, {4, 5}, 0},  {{6, 7}, {5, 7}, {1, 6}, 0},
  };
  return rows;
}

std::vector<Orbit> literal(const std::vector<std::vector<std::pair<int, int>>>& rows) {
  std::vector<Orbit> out;
  for (const auto& r : rows) {
    Orbit o;
    for (auto [i, j] : r) o.emplace_back(i, j);
    out.push_back(std::move(o));
  }
  return out;
}

Element pure(const PairVector& v) { return Element::pure(v); }

bool same_set(std::vector<Element> a, std::vector<Element> b) {
  std::sort(a.begin(), a.end(), element_less);
  std::sort(b.begin(), b.end(), element_less);
  return a == b;
}

}  // namespace

BraidWord x_word() { return BraidWord::parse(n, "2 -1 5 -4"); }
BraidWord y_word() { return BraidWord::parse(n, "2 3 6 5 4 -3 -2 -1 -3 -2"); }

Permutation alpha() { return Permutation::parse(n, "(1,3,4,2,5,6,7)"); }
Permutation beta() { return Permutation::parse(n, "(1,2,3)(4,5,6)"); }

XY build_xy() { return {normalize(x_word()), normalize(y_word())}; }

PairVector defect(const Element& x, const Element& y) {
  const Element d = mul(mul(mul(x, y), inv(x)), inv(pow(y, 2)));
  if (!d.is_pure()) throw NotPure();
  return d.vec();
}

PairVector expected_defect() {
  return PairVector::from_entries(n, {{{4, 7}, 1},
                                      {{1, 7}, 1},
                                      {{1, 6}, 1},
                                      {{1, 2}, 1},
                                      {{2, 7}, -1},
                                      {{2, 6}, -1},
                                      {{2, 4}, -1},
                                      {{4, 6}, -1}});
}

PairVector n0() { return PairVector::from_entries(n, {{{3, 5}, 1}, {{1, 6}, 1}, {{2, 7}, -1}, {{5, 7}, -1}}); }

Element v0() { return mul(pure(n0()), build_xy().y); }

std::vector<Orbit> y_orbit_table() {
  return literal({{{1, 2}, {4, 7}, {3, 6}, {1, 5}, {2, 7}, {4, 6}, {3, 5}},
                  {{1, 3}, {1, 7}, {6, 7}, {5, 6}, {2, 5}, {2, 4}, {3, 4}},
                  {{1, 4}, {3, 7}, {1, 6}, {5, 7}, {2, 6}, {4, 5}, {2, 3}}});
}

std::vector<Orbit> x_orbit_table() {
  return literal({{{1, 2}, {1, 3}, {2, 3}},
                  {{4, 6}, {5, 6}, {4, 5}},
                  {{2, 7}, {1, 7}, {3, 7}},
                  {{4, 7}, {6, 7}, {5, 7}},
                  {{3, 6}, {2, 5}, {1, 4}},
                  {{1, 5}, {3, 4}, {2, 6}},
                  {{3, 5}, {2, 4}, {1, 6}}});
}

bool LinearSystem::satisfied_by(const PairVector& p) const {
  const BigVector big = to_big(p);
  return a * std::span<const BigInt>(big) == b;
}

LinearSystem paper_system() {
  const auto& rows = coefficient_rows();
  const auto orbits = y_orbit_table();
  LinearSystem s{IntMatrix(orbits.size() + rows.size(), pair_count(n)), BigVector(orbits.size() + rows.size())};
  std::size_t r = 0;
  for (const auto& o : orbits) {
    for (const Pair& p : o) s.a(r, idx(p.i, p.j)) = 1;
    ++r;
  }
  for (const auto& row : rows) {
    s.a(r, idx(row.minus.i, row.minus.j)) -= 1;
    s.a(r, idx(row.plus1.i, row.plus1.j)) += 1;
    s.a(r, idx(row.plus2.i, row.plus2.j)) += 1;
    s.b[r] = row.rhs;
    ++r;
  }
  return s;
}

LinearSystem engine_system() {
  const auto [x, y] = build_xy();
  const std::size_t d = pair_count(n);
  auto f = [&](const PairVector& nv) {
    const Element v = mul(pure(nv), y);
    return defect(x, v);
  };
  const PairVector f0 = f(PairVector(n));
  const auto orbits = enumerate_orbits(y).orbits;

  LinearSystem s{IntMatrix(orbits.size() + d, d), BigVector(orbits.size() + d)};
  std::size_t r = 0;
  for (const auto& o : orbits) {
    for (const Pair& p : o) s.a(r, pair_index(n, p)) = 1;
    ++r;
  }
  for (std::size_t c = 0; c < d; ++c) {
    const PairVector col = f(PairVector::basis(n, pair_at(n, static_cast<int>(c)))) - f0;
    for (std::size_t k = 0; k < d; ++k) s.a(r + k, c) = col.coeffs()[k];
  }
  for (std::size_t k = 0; k < d; ++k) s.b[r + k] = -f0.coeffs()[k];
  return s;
}

Family solve_family() {
  const LinearSystem s = paper_system();
  auto sol = solve_integer(s.a, s.b);
  if (!sol) throw std::logic_error("Frobenius system has no integer solution");
  Family f{from_big(sol->particular), {}};
  for (const auto& k : sol->kernel) f.kernel.push_back(from_big(k));
  return f;
}

PairVector solution_n(const Params& r) {
  PairVector p(n);
  for (const auto& row : parametrization()) {
    std::int64_t v = row.constant;
    for (std::size_t l = 0; l < 6; ++l) v += row.r[l] * r[l];
    p[Pair(row.i, row.j)] = v;
  }
  return p;
}

IntMatrix parametrization_matrix() {
  IntMatrix m(pair_count(n), 6);
  for (const auto& row : parametrization())
    for (std::size_t l = 0; l < 6; ++l) m(idx(row.i, row.j), l) = row.r[l];
  return m;
}

Params recover_parameters(const PairVector& nv) {
  if (nv.strands() != n) throw DegreeMismatch(nv.strands(), n);
  const BigVector rhs = to_big(nv - solution_n({0, 0, 0, 0, 0, 0}));
  auto sol = solve_integer(parametrization_matrix(), rhs);
  if (!sol) throw NotASolution("N = " + nv.to_string() + " is not in the Frobenius solution family");
  Params r{};
  for (std::size_t l = 0; l < 6; ++l) r[l] = static_cast<std::int64_t>(sol->particular[l]);
  return r;
}

bool Witness::valid() const {
  return std::all_of(certificate.begin(), certificate.end(), [](const Relation& r) { return r.holds; });
}

Witness build_frobenius(const PairVector& nv) {
  if (nv.strands() != n) throw DegreeMismatch(nv.strands(), n);
  if (!paper_system().satisfied_by(nv))
    throw NotASolution("N = " + nv.to_string() + " does not satisfy the Frobenius system");
  const auto [x, y] = build_xy();
  const Element v = mul(pure(nv), y);
  const Element e = Element::identity(n);
  Witness w{x, v, {}};
  w.certificate.push_back({"x^3 = 1", pow(x, 3), e, false});
  w.certificate.push_back({"v^7 = 1", pow(v, 7), e, false});
  w.certificate.push_back({"x v x^-1 = v^2", conj(v, x), pow(v, 2), false});
  for (auto& r : w.certificate) r.holds = r.lhs == r.rhs;
  if (!w.valid()) throw std::logic_error("Frobenius certificate failed for a solution of the system");
  return w;
}

PairVector conjugator_between(const PairVector& nv) {
  const Params r = recover_parameters(nv);
  const auto [r1, r2, r3, r4, r5, r6] = r;
  std::array<std::int64_t, 8> s{};  // s[1..7]
  s[4] = 0;
  s[1] = s[4] + (-r6 + r4 + r3 - r2 + 1);
  s[6] = s[1] + (r6 - r3 + r2);
  s[3] = s[6] + (r3 - r2);
  s[7] = s[3] + r2;
  s[2] = s[7] + (-r5 - r4 - r3);
  s[5] = s[2] + (-r6 + r5 + r4 + r3 - r2 - r1);

  // theta is constant on each x-orbit; orbit k carries s_k
  static const std::array<std::array<std::pair<int, int>, 3>, 7> groups = {{
      {{{1, 2}, {1, 3}, {2, 3}}},
      {{{2, 7}, {1, 7}, {3, 7}}},
      {{{3, 6}, {2, 5}, {1, 4}}},
      {{{3, 5}, {2, 4}, {1, 6}}},
      {{{4, 6}, {5, 6}, {4, 5}}},
      {{{4, 7}, {6, 7}, {5, 7}}},
      {{{1, 5}, {3, 4}, {2, 6}}},
  }};
  PairVector theta(n);
  for (std::size_t k = 0; k < groups.size(); ++k)
    for (auto [i, j] : groups[k]) theta[Pair(i, j)] = s[k + 1];

  const auto [x, y] = build_xy();
  const Element t = pure(theta);
  if (conj(x, t) != x || conj(v0(), t) != mul(pure(nv), y))
    throw std::logic_error("Frobenius conjugator failed verification");
  return theta;
}

Chain standardize_frobenius(const Element& a, const Element& b, std::size_t rho_choice, int lambda1_twist) {
  if (a.strands() != n) throw DegreeMismatch(a.strands(), n);
  if (b.strands() != n) throw DegreeMismatch(b.strands(), n);
  if (!pow(a, 3).is_identity() || a.is_identity()) throw NotFrobenius("first generator does not have order 3");
  if (!pow(b, 7).is_identity() || b.is_identity()) throw NotFrobenius("second generator does not have order 7");
  if (conj(b, a) != pow(b, 2)) throw NotFrobenius("generators do not satisfy a b a^-1 = b^2");

  const auto [x, y] = build_xy();
  const Element v_0 = v0();

  // (1) permutation level: rho sigma(H) rho^{-1} = <alpha, beta>
  std::set<Permutation> f0;
  {
    std::vector<Permutation> frontier{Permutation(n)};
    f0.insert(frontier.front());
    for (std::size_t k = 0; k < frontier.size(); ++k)
      for (const auto& g : {alpha(), beta()}) {
        Permutation next = frontier[k] * g;
        if (f0.insert(next).second) frontier.push_back(next);
      }
  }
  std::vector<Permutation> sigma_h;
  for (const auto& h : generated_subgroup({a, b})) sigma_h.push_back(h.perm());
  if (sigma_h.size() != 21) throw NotFrobenius("generated subgroup has " + std::to_string(sigma_h.size()) + " elements");

  std::vector<Permutation> rhos;
  for (const auto& rho : all_permutations(n)) {
    const Permutation rinv = rho.inverse();
    std::set<Permutation> img;
    for (const auto& p : sigma_h) img.insert(rho * p * rinv);
    if (img == f0) rhos.push_back(rho);
  }
  if (rhos.empty()) throw NotFrobenius("permutation image is not conjugate to <alpha, beta>");

  Chain c;
  c.rho = rhos[rho_choice % rhos.size()];
  // conj(g, c) has permutation perm(c) * perm(g) * perm(c)^{-1}
  c.rho_hat = normalize(canonical_lift(c.rho));

  // (2) the elements of the conjugated subgroup over beta and alpha
  const Element a1 = conj(a, c.rho_hat), b1 = conj(b, c.rho_hat);
  std::optional<Element> x_t, y_t;
  for (const auto& h : generated_subgroup({a1, b1})) {
    if (h.perm() == beta()) x_t = h;
    if (h.perm() == alpha()) y_t = h;
  }
  if (!x_t || !y_t) throw std::logic_error("conjugated subgroup misses beta or alpha");

  // (3) lambda1 sends x~ to x
  const ConjugacyResult cr = are_conjugate(*x_t, x);
  if (cr.verdict != Verdict::Yes) throw std::logic_error("x~ and x are not conjugate");
  // delta_{0,3} commutes with x = delta_{0,3} delta_{3,3}
  c.lambda1 = mul(pow(normalize(BraidWord::parse(n, "2 -1")), lambda1_twist), *cr.witness);
  const Element y1 = conj(*y_t, c.lambda1);

  // (4) lambda2 in {e, s1 s2^-1, s4 s5^-1} brings perm(y1) into <alpha>
  std::vector<Permutation> alpha_powers;
  for (int k = 1; k < 7; ++k) alpha_powers.push_back(power(alpha(), k));
  const std::array<std::pair<char, const char*>, 3> options = {{{'a', ""}, {'1', "1 -2"}, {'2', "4 -5"}}};
  std::optional<Element> y2;
  for (const auto& [label, word] : options) {
    const Element l2 = normalize(BraidWord::parse(n, word));
    const Element cand = conj(y1, inv(l2));
    if (std::find(alpha_powers.begin(), alpha_powers.end(), cand.perm()) == alpha_powers.end()) continue;
    if (conj(x, l2) != x) throw std::logic_error("lambda2 does not centralize x");
    c.lambda2 = l2;
    c.z = label;
    y2 = cand;
    break;
  }
  if (!y2) throw std::logic_error("no centralizer correction applies");

  // (5) v is the power of y2 over alpha; N = v y^{-1}
  std::optional<Element> v;
  for (int k = 1; k < 7 && !v; ++k) {
    Element p = pow(*y2, k);
    if (p.perm() == alpha()) v = p;
  }
  c.n = mul(*v, inv(y)).vec();
  c.theta = conjugator_between(c.n);

  // (6) total conjugator
  c.total = mul(mul(mul(inv(pure(c.theta)), inv(c.lambda2)), c.lambda1), c.rho_hat);
  if (!same_set(generated_subgroup({conj(a, c.total), conj(b, c.total)}), generated_subgroup({x, v_0})))
    throw std::logic_error("standardization chain does not reach <x, v0>");
  return c;
}

}  // namespace cryst::frobenius
