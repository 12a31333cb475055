#include "doctest.h"
#include "properties.hpp"

namespace {
  constexpr int cases = 1000;
}

TEST_CASE("composition is associative") {
  properties::Generator gen(1);
  CHECK(properties::associativity(gen, cases) == 0);
}

TEST_CASE("inverse reverses products") {
  properties::Generator gen(2);
  CHECK(properties::inverse_reverses_products(gen, cases) == 0);
}

TEST_CASE("printing and parsing round trip") {
  properties::Generator gen(3);
  CHECK(properties::print_parse_round_trip(gen, cases) == 0);
}

TEST_CASE("closure is idempotent") {
  properties::Generator gen(4);
  CHECK(properties::closure_idempotent(gen, cases) == 0);
}

TEST_CASE("blocks move with conjugation") {
  properties::Generator gen(5);
  CHECK(properties::blocks_follow_conjugation(gen, cases) == 0);
}

TEST_CASE("the zero and the identity") {
  properties::Generator gen(6);
  for (int i = 0; i < cases; ++i) {
    std::size_t const n = gen.uniform(1, 16);
    auto              a = gen.pperm(n);
    auto              z = semitrans::PartialPerm(n);
    auto              e = semitrans::PartialPerm::identity(n);
    REQUIRE((a * z).is_zero());
    REQUIRE((z * a).is_zero());
    REQUIRE(a * e == a);
    REQUIRE(e * a == a);
  }
}
