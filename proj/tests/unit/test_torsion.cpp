#include <doctest.h>

#include "crystbraid/errors.hpp"
#include "crystbraid/sampling.hpp"
#include "crystbraid/torsion.hpp"
#include "support.hpp"

using namespace cryst;

namespace {

Element nf(int n, const char* w) { return normalize(BraidWord::parse(n, w)); }

}  // namespace

TEST_SUITE("torsion") {
  TEST_CASE("block specs") {
    CHECK(BlockSpec::parse(11, "3,3,5").blocks() == std::vector<int>{3, 3, 5});
    CHECK(BlockSpec::parse(11, "3,3,5").to_string() == "3,3,5");
    CHECK(BlockSpec(11, {3, 3, 5}).offset(3) == 6);
    CHECK(BlockSpec(8, {3, 5}).lcm() == 15);
    CHECK(BlockSpec(7, {3, 3}).theta() == Permutation::parse(7, "(1,2,3)(4,5,6)"));
    CHECK_THROWS_AS(BlockSpec(7, {4}), DomainError);
    CHECK_THROWS_AS(BlockSpec(7, {5, 3}), DomainError);
    CHECK_THROWS_AS(BlockSpec(7, {3, 5}), DomainError);
    CHECK_THROWS_AS(BlockSpec(7, {1}), DomainError);
    CHECK_THROWS_AS(BlockSpec::parse(7, "3,,3"), DomainError);
  }

  TEST_CASE("alpha") {
    CHECK(alpha(0, 3, 3) == nf(3, "1 2"));
    for (int n = 3; n <= 9; ++n) {
      std::vector<int> cycle{1};
      for (int k = n; k >= 2; --k) cycle.push_back(k);
      CHECK(alpha(0, n, n).perm() == Permutation::from_cycles(n, {cycle}));
    }
    CHECK(alpha(2, 3, 6) == nf(6, "3 4"));
    CHECK_THROWS_AS(alpha(2, 3, 4), DomainError);
    CHECK_THROWS_AS(alpha(0, 1, 4), DomainError);
  }

  TEST_CASE("delta blocks") {
    CHECK(delta_block(0, 3, 3) == nf(3, "2 -1"));
    CHECK(element_order(delta_block(0, 7, 7)) == Order(7));
    for (int k : {3, 5, 7, 9})
      for (int n = k; n <= 12; ++n) {
        const Element prod = mul(delta_block(0, k, n), alpha(0, k, n));
        REQUIRE(prod.is_pure());
        PairVector expected(n);
        for (int i = (k + 1) / 2; i <= k - 1; ++i) expected[Pair(i, k)] = 1;
        CHECK(prod.vec() == expected);
      }
    CHECK_THROWS_AS(delta_block(0, 4, 5), DomainError);
    CHECK_THROWS_AS(delta_block(3, 3, 5), DomainError);
  }

  TEST_CASE("delta orders for every block and offset") {
    for (int k : {3, 5, 7, 9})
      for (int n = k; n <= 12; ++n)
        for (int r = 0; r + k <= n; ++r) CHECK(element_order(delta_block(r, k, n)) == Order(k));
  }

  TEST_CASE("composite delta") {
    CHECK(delta_composite(BlockSpec(7, {3, 3})) == nf(7, "2 -1 5 -4"));
    CHECK(element_order(delta_composite(BlockSpec(8, {3, 5}))) == Order(15));
    CHECK(delta_composite(BlockSpec(3, {3})) == delta_block(0, 3, 3));
    for (int n = 3; n <= 9; ++n)
      for (const auto& spec : testsupport::all_specs(n)) {
        const Element d = delta_composite(spec);
        CHECK(d.perm() == spec.theta());
        CHECK(element_order(d) == Order(spec.lcm()));
        CHECK(normalize(delta_composite_word(spec)) == d);
      }
  }

  TEST_CASE("finite order candidates") {
    const BlockSpec s3(3, {3});
    CHECK(finite_order_candidates(s3, PairVector(3)));
    CHECK_FALSE(finite_order_candidates(s3, PairVector::basis(3, Pair(1, 2))));
    const BlockSpec s7(7, {7});
    const PairVector n0 = PairVector::from_entries(7, {{{3, 5}, 1}, {{1, 6}, 1}, {{2, 7}, -1}, {{5, 7}, -1}});
    CHECK(finite_order_candidates(s7, n0) ==
          (element_order(mul(Element::pure(n0), delta_composite(s7))) == Order(7)));
    CHECK(finite_order_candidates(s7, n0));
  }

  TEST_CASE("finite order candidates agree with direct powering") {
    for (int n = 3; n <= 9; ++n)
      for (const auto& spec : testsupport::all_specs(n)) {
        Rng rng = stream_rng(300 + static_cast<std::uint64_t>(n), std::hash<std::string>{}(spec.to_string()));
        const Element d = delta_composite(spec);
        const auto orbits = pair_orbits(spec.theta());
        int positives = 0;
        for (int trial = 0; trial < 1000; ++trial) {
          PairVector a = random_pair_vector(rng, n, 2);
          if (trial % 2 == 0)  // push half the samples onto the solution set
            for (const auto& o : orbits) {
              std::int64_t sum = 0;
              for (const Pair& p : o) sum += a[p];
              a[o.front()] -= sum;
            }
          const bool direct = element_order(mul(Element::pure(a), d)) == Order(spec.lcm());
          const bool predicted = finite_order_candidates(spec, a);
          CHECK(predicted == direct);
          positives += direct;
        }
        CHECK(positives >= 500);
      }
  }

  TEST_CASE("order n elements") {
    CHECK(order_n_element(3).perm() == Permutation::parse(3, "(1,3,2)"));
    CHECK(element_order(order_n_element(3)) == Order(3));
    CHECK(element_order(order_n_element(5)) == Order(5));
    CHECK(pow(order_n_element(7), 7).is_identity());
    for (int n = 3; n <= 11; n += 2) CHECK(element_order(order_n_element(n)) == Order(n));
    CHECK_THROWS_AS(order_n_element(4), DomainError);
    CHECK_THROWS_AS(order_n_element(1), DomainError);
  }

  TEST_CASE("torsion witnesses") {
    CHECK_FALSE(torsion_witness(Permutation::parse(3, "(1,2)")).has_value());
    const auto w3 = torsion_witness(Permutation::parse(3, "(1,3,2)"));
    REQUIRE(w3.has_value());
    CHECK(element_order(lift_with_correction(Permutation::parse(3, "(1,3,2)"), *w3)) == Order(3));
    const auto p7 = Permutation::parse(7, "(1,5,2)(3,7,6)");
    const auto w7 = torsion_witness(p7);
    REQUIRE(w7.has_value());
    CHECK(element_order(lift_with_correction(p7, *w7)) == Order(3));
    CHECK_THROWS_AS(torsion_witness(Permutation(4)), DomainError);

    // corrections sit on the least pair of each orbit
    for (const auto& o : pair_orbits(p7))
      for (std::size_t k = 1; k < o.size(); ++k) CHECK((*w7)[o[k]] == 0);
  }

  TEST_CASE("torsion dichotomy over small symmetric groups") {
    for (int n = 2; n <= 5; ++n)
      for (const auto& p : all_permutations(n)) {
        if (p.is_identity()) continue;
        const auto w = torsion_witness(p);
        const bool odd = order(p) % 2 == 1;
        CHECK(w.has_value() == odd);
        if (w) CHECK(element_order(lift_with_correction(p, *w)) == Order(order(p)));
      }
  }

  TEST_CASE("abelian realization") {
    const auto g = abelian_realization(BlockSpec(7, {3, 3}));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == delta_block(0, 3, 7));
    CHECK(g[1] == delta_block(3, 3, 7));
    CHECK(mul(g[0], g[1]) == mul(g[1], g[0]));
    CHECK(abelian_realization(BlockSpec(3, {3})).size() == 1);
    const auto h = abelian_realization(BlockSpec(8, {3, 5}));
    REQUIRE(h.size() == 2);
    CHECK(element_order(h[0]) == Order(3));
    CHECK(element_order(h[1]) == Order(5));
    CHECK(mul(h[0], h[1]) == mul(h[1], h[0]));
    CHECK(element_order(mul(h[0], h[1])) == Order(15));
    // the generated group is Z_3 x Z_5 of order 15
    CHECK(generated_subgroup(h).size() == 15);
  }

  TEST_CASE("embedding keeps delta orders") {
    for (int k : {3, 5, 7})
      for (int n = k; n <= 9; ++n) {
        const Element d = delta_block(0, k, n);
        for (int m = n; m <= 11; ++m) {
          const Element e = embed(d, m);
          CHECK(element_order(e) == Order(k));
          CHECK(e == delta_block(0, k, m));
        }
      }
  }
}
