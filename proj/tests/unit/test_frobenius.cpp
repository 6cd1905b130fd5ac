#include <doctest.h>

#include <algorithm>
#include <set>

#include "crystbraid/errors.hpp"
#include "crystbraid/frobenius.hpp"
#include "crystbraid/sampling.hpp"

using namespace cryst;
namespace fr = cryst::frobenius;

namespace {

PairVector vec7(std::initializer_list<std::pair<Pair, std::int64_t>> entries) {
  return PairVector::from_entries(7, std::vector<std::pair<Pair, std::int64_t>>(entries));
}

std::vector<Element> sorted_closure(const std::vector<Element>& gens) {
  auto out = generated_subgroup(gens);
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("x and y") {
    const auto xy = fr::build_xy();
    CHECK(xy.x.perm() == Permutation::parse(7, "(1,2,3)(4,5,6)"));
    CHECK(xy.y.perm() == Permutation::parse(7, "(1,3,4,2,5,6,7)"));
    CHECK(fr::alpha() == xy.y.perm());
    CHECK(fr::beta() == xy.x.perm());
    CHECK(element_order(xy.x) == Order(3));
    CHECK(element_order(xy.y) == Order(7));
    CHECK(xy.x == normalize(fr::x_word()));
    CHECK(fr::x_word().to_string() == "2 -1 5 -4");
  }

  TEST_CASE("defect vector") {
    const auto xy = fr::build_xy();
    const PairVector expected = vec7({{{4, 7}, 1}, {{1, 7}, 1}, {{1, 6}, 1}, {{1, 2}, 1},
                                      {{2, 7}, -1}, {{2, 6}, -1}, {{2, 4}, -1}, {{4, 6}, -1}});
    CHECK(fr::defect(xy.x, xy.y) == expected);
    CHECK(fr::expected_defect() == expected);
    // as a single normal form of the word x y x^-1 y^-2
    const BraidWord w = concat(concat(fr::x_word(), fr::y_word()),
                               concat(invert(fr::x_word()), concat(invert(fr::y_word()), invert(fr::y_word()))));
    CHECK(normalize(w) == Element::pure(expected));
    CHECK(fr::defect(Element::identity(7), Element::identity(7)).is_zero());
    CHECK(fr::defect(xy.x, fr::v0()).is_zero());
    CHECK_THROWS_AS(fr::defect(xy.x, xy.x), NotPure);
  }

  TEST_CASE("the linear system") {
    const fr::LinearSystem paper = fr::paper_system();
    const fr::LinearSystem engine = fr::engine_system();
    CHECK(paper.a.rows() == 24);
    CHECK(paper.a.cols() == 21);
    const PairVector n0 = vec7({{{3, 5}, 1}, {{1, 6}, 1}, {{2, 7}, -1}, {{5, 7}, -1}});
    CHECK(fr::n0() == n0);
    CHECK(paper.satisfied_by(n0));
    CHECK(engine.satisfied_by(n0));
    CHECK_FALSE(paper.satisfied_by(PairVector(7)));

    // both systems cut out the same affine lattice: equal augmented HNFs
    auto augmented = [](const fr::LinearSystem& s) {
      IntMatrix m(s.a.rows(), s.a.cols() + 1);
      for (std::size_t r = 0; r < s.a.rows(); ++r) {
        for (std::size_t c = 0; c < s.a.cols(); ++c) m(r, c) = s.a(r, c);
        m(r, s.a.cols()) = s.b[r];
      }
      const HermiteForm h = hnf(m);
      std::vector<BigVector> rows;
      for (std::size_t r = 0; r < h.rank; ++r) rows.push_back(h.h.row(r));
      return rows;
    };
    CHECK(augmented(paper) == augmented(engine));
  }

  TEST_CASE("solution family") {
    const fr::Family f = fr::solve_family();
    CHECK(f.kernel.size() == 6);
    CHECK(fr::paper_system().satisfied_by(f.particular));
    CHECK(f.particular == fr::solution_n({}));
    CHECK(fr::solution_n({}) == vec7({{{1, 2}, 1}, {{2, 4}, -1}, {{2, 7}, -1}, {{3, 4}, 1}}));

    // the closed-form parametrization spans the same kernel lattice
    const IntMatrix p = fr::parametrization_matrix();
    CHECK(p.rows() == 21);
    CHECK(p.cols() == 6);
    std::vector<BigVector> kernel_rows, param_rows;
    for (const auto& k : f.kernel) kernel_rows.emplace_back(k.coeffs().begin(), k.coeffs().end());
    for (std::size_t c = 0; c < 6; ++c) param_rows.push_back(p.column(c));
    const IntMatrix kb = row_lattice_basis(kernel_rows, 21), pb = row_lattice_basis(param_rows, 21);
    CHECK(hnf(kb).h == hnf(pb).h);

    Rng rng = stream_rng(500, 0);
    for (int trial = 0; trial < 200; ++trial) {
      fr::Params r{};
      for (auto& v : r) v = uniform_int(rng, -5, 5);
      const PairVector n = fr::solution_n(r);
      CHECK(fr::paper_system().satisfied_by(n));
      CHECK(fr::recover_parameters(n) == r);
    }
    CHECK(fr::recover_parameters(fr::n0()) == fr::Params{0, 0, 0, -1, 1, 0});
    CHECK_THROWS_AS(fr::recover_parameters(PairVector(7)), NotASolution);
  }

  TEST_CASE("certified witnesses") {
    const fr::Witness w = fr::build_frobenius(fr::n0());
    CHECK(w.valid());
    REQUIRE(w.certificate.size() == 3);
    for (const auto& rel : w.certificate) {
      CHECK(rel.holds);
      CHECK(rel.lhs == rel.rhs);
    }
    CHECK(w.v == fr::v0());
    CHECK(pow(w.x, 3).is_identity());
    CHECK(pow(w.v, 7).is_identity());
    CHECK(conj(w.v, w.x) == pow(w.v, 2));

    const auto group = generated_subgroup({w.x, w.v});
    CHECK(group.size() == 21);
    int order3 = 0, order7 = 0;
    for (const auto& g : group) {
      const Order o = element_order(g);
      order3 += o == Order(3);
      order7 += o == Order(7);
    }
    CHECK(order3 == 14);
    CHECK(order7 == 6);

    CHECK_THROWS_AS(fr::build_frobenius(PairVector(7)), NotASolution);

    Rng rng = stream_rng(501, 0);
    for (int trial = 0; trial < 30; ++trial) {
      fr::Params r{};
      for (auto& v : r) v = uniform_int(rng, -3, 3);
      CHECK(fr::build_frobenius(fr::solution_n(r)).valid());
    }
  }

  TEST_CASE("conjugators within the family") {
    const Element x = fr::build_xy().x, y = fr::build_xy().y;
    for (const fr::Params& r : {fr::Params{}, fr::Params{1, 0, 0, 0, 0, 0}, fr::Params{0, 0, 0, -1, 1, 0},
                                fr::Params{2, -1, 3, 0, -2, 1}}) {
      const PairVector n = fr::solution_n(r);
      const PairVector theta = fr::conjugator_between(n);
      const Element t = Element::pure(theta);
      CHECK(conj(x, t) == x);
      CHECK(conj(fr::v0(), t) == mul(Element::pure(n), y));
    }
    const PairVector theta0 = fr::conjugator_between(fr::n0());
    CHECK(conj(fr::v0(), Element::pure(theta0)) == fr::v0());
    CHECK_THROWS_AS(fr::conjugator_between(PairVector(7)), NotASolution);
  }

  TEST_CASE("standardizing subgroups") {
    const Element x = fr::build_xy().x;
    const auto target = sorted_closure({x, fr::v0()});

    const fr::Chain trivial = fr::standardize_frobenius(x, fr::v0());
    CHECK(sorted_closure({conj(x, trivial.total), conj(fr::v0(), trivial.total)}) == target);

    std::set<char> cases;
    Rng rng = stream_rng(502, 0);
    for (int trial = 0; trial < 30; ++trial) {
      fr::Params r{};
      for (auto& v : r) v = uniform_int(rng, -3, 3);
      const fr::Witness w = fr::build_frobenius(fr::solution_n(r));
      const Element c = mul(Element::pure(random_pair_vector(rng, 7, 2)), normalize(random_word(rng, 7, 8)));
      const Element a = conj(w.x, c), b = conj(w.v, c);
      for (int twist = 0; twist < 3; ++twist) {
        const auto choice = static_cast<std::size_t>(uniform_int(rng, 0, 41));
        const fr::Chain chain = fr::standardize_frobenius(a, b, choice, twist);
        CHECK(sorted_closure({conj(a, chain.total), conj(b, chain.total)}) == target);
        CHECK(conj(fr::v0(), Element::pure(chain.theta)) == mul(Element::pure(chain.n), fr::build_xy().y));
        CHECK(fr::paper_system().satisfied_by(chain.n));
        cases.insert(chain.z);
      }
    }
    CHECK(cases == std::set<char>{'1', '2', 'a'});

    CHECK_THROWS_AS(fr::standardize_frobenius(x, fr::build_xy().y), NotFrobenius);
    CHECK_THROWS_AS(fr::standardize_frobenius(fr::v0(), x), NotFrobenius);
  }
}
