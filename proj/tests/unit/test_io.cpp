#include <doctest.h>

#include "crystbraid/errors.hpp"
#include "crystbraid/io.hpp"
#include "crystbraid/sampling.hpp"
#include "crystbraid/torsion.hpp"

using namespace cryst;

TEST_SUITE("io") {
  TEST_CASE("element JSON") {
    const Element g = normalize(BraidWord::parse(4, "1 2 -1 3"));
    const io::json j = io::to_json(g);
    CHECK(j.dump() == R"({"n":4,"perm":[4,2,1,3],"vec":{"2,3":-1}})");
    CHECK(io::element_from_json(j) == g);
    CHECK(io::to_json(Element::identity(3)).dump() == R"({"n":3,"perm":[1,2,3],"vec":{}})");
    CHECK(io::element_from_json(io::json::parse(R"({"n":2,"perm":[2,1]})")) == normalize(BraidWord(2, {1})));
  }

  TEST_CASE("round trips") {
    Rng rng = stream_rng(600, 0);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(uniform_int(rng, 1, 9));
      const Element g = normalize(random_word(rng, n, 12));
      CHECK(io::element_from_json(io::to_json(g)) == g);
      CHECK(io::parse_element(n, io::to_json(g).dump()) == g);
      CHECK(io::pair_vector_from_json(n, io::to_json(g.vec())) == g.vec());
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::parse_element(3, "{\"n\":3"), ParseError);
    CHECK_THROWS_AS(io::parse_element(3, R"({"n":3,"perm":[1,2]})"), ParseError);
    CHECK_THROWS_AS(io::parse_element(3, R"({"n":3,"perm":[1,1,2]})"), DomainError);
    CHECK_THROWS_AS(io::parse_element(3, R"({"n":3,"perm":[1,2,3],"vec":{"1,2":"x"}})"), ParseError);
    CHECK_THROWS_AS(io::parse_element(3, R"({"n":3,"perm":[1,2,3],"vec":{"1,5":1}})"), DomainError);
    CHECK_THROWS_AS(io::parse_element(4, R"({"n":3,"perm":[1,2,3]})"), DegreeMismatch);
    CHECK_THROWS_AS(io::parse_element(3, "1 7"), DomainError);
  }

  TEST_CASE("orbit tables, matrices and abelianizations") {
    const OrbitTable t = enumerate_orbits(delta_block(0, 3, 3));
    CHECK(io::to_json(t).dump() == R"([["1,2","1,3","2,3"]])");
    CHECK(io::to_json(IntMatrix{{1, -2}, {0, 3}}).dump() == "[[1,-2],[0,3]]");
    IntMatrix big(1, 1);
    big(0, 0) = BigInt("123456789012345678901234567890");
    CHECK(io::to_json(big).dump() == R"([["123456789012345678901234567890"]])");
    CHECK(io::to_json(Abelianization{1, {3}}).dump() == "[1,3]");
  }
}
