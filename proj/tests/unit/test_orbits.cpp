#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "crystbraid/errors.hpp"
#include "crystbraid/frobenius.hpp"
#include "crystbraid/orbits.hpp"
#include "crystbraid/torsion.hpp"
#include "support.hpp"

using namespace cryst;

namespace {

using PairSet = std::set<Pair>;

std::set<PairSet> as_sets(const std::vector<Orbit>& orbits) {
  std::set<PairSet> out;
  for (const auto& o : orbits) out.emplace(o.begin(), o.end());
  return out;
}

// consecutive entries (cyclically) are related by the action of g
bool follows_action(const Element& g, const Orbit& o) {
  for (std::size_t k = 0; k < o.size(); ++k)
    if (action_on_basis(g, o[k]) != o[(k + 1) % o.size()]) return false;
  return true;
}

OrbitTable canonical(int n, std::vector<Orbit> orbits) {
  OrbitTable t{n, std::nullopt, std::move(orbits)};
  t.canonicalize();
  return t;
}

}  // namespace

TEST_SUITE("orbits") {
  TEST_CASE("generic enumeration") {
    const OrbitTable id = enumerate_orbits(Element::identity(5));
    CHECK(id.orbits.size() == 10);
    for (const auto& o : id.orbits) CHECK(o.size() == 1);

    const OrbitTable a4 = enumerate_orbits(alpha(0, 4, 4));
    CHECK(a4.lengths() == std::vector<std::size_t>{4, 2});  // six pairs: one 4-cycle, one 2-cycle
    CHECK(a4.is_partition());
    CHECK(a4.to_string().find("{1,2} -> {2,3} -> {3,4} -> {1,4}") != std::string::npos);
  }

  TEST_CASE("alpha orbits follow the closed formula") {
    for (int n = 3; n <= 9; ++n) {
      const Element a = alpha(0, n, n);
      const auto formula = alpha_orbit_formula(n);
      REQUIRE(formula.size() == static_cast<std::size_t>((n - 1) / 2 + (n % 2 == 0)));
      for (std::size_t k = 0; k < formula.size(); ++k) {
        const bool extra = n % 2 == 0 && k + 1 == formula.size();
        CHECK(formula[k].size() == static_cast<std::size_t>(extra ? n / 2 : n));
        CHECK(formula[k].front() == (extra ? Pair(1, n / 2 + 1) : Pair(1, static_cast<int>(k) + 2)));
        CHECK(follows_action(a, formula[k]));
      }
      CHECK(enumerate_orbits(a) == canonical(n, formula));
    }
  }

  TEST_CASE("alpha basis pairs") {
    for (int n = 3; n <= 9; n += 2)
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        Orbit o;
        for (int j = 1; j <= n; ++j) o.push_back(alpha_basis_pair(n, i, j));
        CHECK(follows_action(alpha(0, n, n), o));
        CHECK(o.front() == Pair(1, i + 1));
      }
    CHECK_THROWS_AS(alpha_basis_pair(6, 1, 1), DomainError);
  }

  TEST_CASE("delta reverses the alpha orbits") {
    for (int k = 3; k <= 9; k += 2) {
      const auto d = enumerate_orbits(delta_block(0, k, k));
      std::vector<Orbit> reversed;
      for (auto o : d.orbits) {
        std::reverse(o.begin(), o.end());
        reversed.push_back(o);
      }
      CHECK(canonical(k, reversed) == enumerate_orbits(alpha(0, k, k)));
    }
  }

  TEST_CASE("closed form examples") {
    const OrbitTable t = closed_form_orbits(BlockSpec(4, {3}));
    CHECK(t == enumerate_orbits(delta_block(0, 3, 4)));
    CHECK(t.lengths() == std::vector<std::size_t>{3, 3});

    const OrbitTable u = closed_form_orbits(BlockSpec(7, {3, 3}));
    int between = 0;
    for (const auto& o : u.orbits) {
      const Pair& p = o.front();
      if (p.i <= 3 && p.j >= 4 && p.j <= 6) {
        ++between;
        CHECK(o.size() == 3);
      }
    }
    CHECK(between == 3);
  }

  TEST_CASE("closed form matches enumeration for every spec up to nine strands") {
    for (int n = 3; n <= 9; ++n)
      for (const auto& spec : testsupport::all_specs(n)) {
        const OrbitTable closed = closed_form_orbits(spec);
        const OrbitTable direct = enumerate_orbits(delta_composite(spec));
        CHECK_MESSAGE(closed == direct, spec.to_string() << " n=" << n);
        CHECK(closed.is_partition());
        for (auto len : closed.lengths()) CHECK(spec.lcm() % static_cast<std::int64_t>(len) == 0);
      }
  }

  TEST_CASE("Frobenius generator orbits are listed verbatim") {
    const auto xy = frobenius::build_xy();
    const auto y_table = frobenius::y_orbit_table();
    const auto x_table = frobenius::x_orbit_table();
    REQUIRE(y_table.size() == 3);
    REQUIRE(x_table.size() == 7);
    CHECK(y_table.front()[0] == Pair(1, 2));
    CHECK(y_table.front()[1] == Pair(4, 7));
    CHECK(y_table.front()[2] == Pair(3, 6));
    for (const auto& o : y_table) {
      CHECK(o.size() == 7);
      CHECK(follows_action(xy.y, o));
    }
    for (const auto& o : x_table) {
      CHECK(o.size() == 3);
      CHECK(follows_action(xy.x, o));
    }
    CHECK(enumerate_orbits(xy.y) == canonical(7, y_table));
    CHECK(enumerate_orbits(xy.x) == canonical(7, x_table));
  }

  TEST_CASE("relabeled basis") {
    const RelabeledBasis b3 = relabeled_basis(BlockSpec(3, {3}));
    REQUIRE(b3.entries().size() == 3);
    for (int t = 1; t <= 3; ++t) {
      const BasisLabel l{'a', {1, 1, t}};
      CHECK(b3.label_of(b3.pair_of(l)) == l);
    }
    for (const auto& [label, pair] : b3.entries()) CHECK(label.type == 'a');

    for (int n = 3; n <= 9; ++n)
      for (const auto& spec : testsupport::all_specs(n)) {
        const RelabeledBasis b = relabeled_basis(spec);
        CHECK(static_cast<int>(b.entries().size()) == pair_count(n));
        PairSet seen;
        for (const auto& [label, pair] : b.entries()) {
          seen.insert(pair);
          CHECK(b.label_of(pair) == label);
          CHECK(b.pair_of(label) == pair);
        }
        CHECK(static_cast<int>(seen.size()) == pair_count(n));

        // orbits of delta are exactly the label families with t running
        std::map<BasisLabel, Orbit> families;
        for (const auto& [label, pair] : b.entries()) {
          BasisLabel key = label;
          if (key.type != 'd') key.indices.pop_back();
          families[key].push_back(pair);
        }
        std::vector<Orbit> orbits;
        for (auto& [key, o] : families) orbits.push_back(o);
        CHECK(as_sets(orbits) == as_sets(closed_form_orbits(spec).orbits));
      }
  }

  TEST_CASE("single odd block relabeling agrees with the alpha basis") {
    for (int n = 3; n <= 9; n += 2) {
      const RelabeledBasis b = relabeled_basis(BlockSpec(n, {n}));
      std::vector<Orbit> from_labels((n - 1) / 2);
      for (const auto& [label, pair] : b.entries()) {
        REQUIRE(label.type == 'a');
        from_labels[label.indices[1] - 1].push_back(pair);
      }
      std::vector<Orbit> from_alpha;
      for (int i = 1; i <= (n - 1) / 2; ++i) {
        Orbit o;
        for (int j = 1; j <= n; ++j) o.push_back(alpha_basis_pair(n, i, j));
        from_alpha.push_back(o);
      }
      CHECK(as_sets(from_labels) == as_sets(from_alpha));
    }
  }
}
