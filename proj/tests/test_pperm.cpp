#include "doctest.h"
#include "fixtures.hpp"

#include "semitrans/error.hpp"
#include "semitrans/pperm.hpp"

using fixtures::pp;
using semitrans::PartialPerm;

TEST_CASE("compose acts on the right") {
  CHECK(pp("(1,2](3]", 3) * pp("(1](2,3]", 3) == pp("(1,3](2]", 3));
  CHECK(PartialPerm(3) * pp("(1,2,3)", 3) == PartialPerm(3));
  CHECK(pp("(1,2,3)", 3) * pp("(1,2,3)", 3) == pp("(1,3,2)", 3));
  CHECK_THROWS_AS(pp("(1,2]", 2) * pp("(1,2]", 3), semitrans::Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(pp("(1,2](3]", 3)) == pp("(2,1](3]", 3));
  CHECK(inverse(pp("(1,2,3)", 3)) == pp("(1,3,2)", 3));
  CHECK(inverse(PartialPerm(4)) == PartialPerm(4));
}

TEST_CASE("rank, domain and image") {
  auto a = pp("(1,2](3]", 3);
  CHECK(a.rank() == 1);
  CHECK(a.domain() == std::vector<semitrans::point_type>{1});
  CHECK(a.image() == std::vector<semitrans::point_type>{2});
  CHECK(PartialPerm::identity_on(3, 0b011).rank() == 2);
  CHECK(PartialPerm(3).rank() == 0);
  CHECK(a(1) == 2u);
  CHECK_FALSE(a(2).has_value());
}

TEST_CASE("power") {
  CHECK(power(pp("(1](2,3,4]", 4), 3).is_zero());
  CHECK_FALSE(power(pp("(1](2,3,4]", 4), 2).is_zero());
  CHECK(power(pp("(1,2)(3]", 3), 2) == pp("(1)(2)(3]", 3));
  auto phi = pp("(1,3](2,4]", 4);
  CHECK(power(phi, 1) == phi);
  CHECK_THROWS(power(phi, 0));
}

TEST_CASE("idempotent power") {
  CHECK(idempotent_power(pp("(1,2](3]", 3)).is_zero());
  CHECK(idempotent_power(pp("(1,2)(3]", 3)) == pp("(1)(2)(3]", 3));
  auto h = pp("(1](2](3)(4)(5)(6)(7)(8)", 8);
  CHECK(idempotent_power(h) == h);
  // (1,2)(3,4,5] has idempotent power the identity on {1,2}.
  CHECK(idempotent_power(pp("(1,2)(3,4,5]", 5)) == pp("(1)(2)(3](4](5]", 5));
}

TEST_CASE("idempotents and nilpotents") {
  CHECK(is_nilpotent(pp("(1,2](3]", 3)));
  CHECK_FALSE(is_nilpotent(pp("(1)(2]", 2)));
  CHECK(is_nilpotent(PartialPerm(2)));
  CHECK(is_idempotent(pp("(1](2)(3)(4)", 4)));
  CHECK_FALSE(is_idempotent(pp("(1,2)", 2)));
}

TEST_CASE("arrows") {
  using arrows_t = std::vector<semitrans::arrow_type>;
  CHECK(arrows(pp("(1,3](2,4](5](6](7](8]", 8)) == arrows_t{{1, 3}, {2, 4}});
  CHECK(arrows(PartialPerm(3)).empty());
  CHECK(arrows(pp("(1,2)", 2)) == arrows_t{{1, 2}, {2, 1}});
}

TEST_CASE("parse") {
  auto a = pp("(1](2](3,5,7](4,6,8]", 8);
  CHECK(a.at(3) == 5);
  CHECK(a.at(5) == 7);
  CHECK(a.at(4) == 6);
  CHECK(a.at(6) == 8);
  CHECK(a.rank() == 4);
  CHECK(pp("0", 3) == PartialPerm(3));
  CHECK(pp(" (1, 2]  ", 2) == pp("(1,2]", 2));
  // Omitted points are undefined.
  CHECK(pp("(1,2]", 3) == pp("(1,2](3]", 3));
}

TEST_CASE("parse errors") {
  using semitrans::ParseError;
  CHECK_THROWS_WITH_AS(pp("(1,6](2,7](3](4](7](8]", 8),
                       doctest::Contains("point 7 repeated"),
                       ParseError);
  CHECK_THROWS_WITH_AS(pp("(1,9]", 8),
                       doctest::Contains("out of range"),
                       ParseError);
  CHECK_THROWS_AS(pp("(1,2", 3), ParseError);
  CHECK_THROWS_AS(pp("1,2]", 3), ParseError);
  CHECK_THROWS_AS(pp("(1;2]", 3), ParseError);
  CHECK_THROWS_AS(pp("()", 3), ParseError);
  CHECK_THROWS_AS(pp("", 3), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(pp("(2,3,1)", 3)) == "(1,2,3)");
  CHECK(to_string(pp("(5](3,4](1,2]", 5)) == "(1,2](3,4](5]");
  CHECK(to_string(PartialPerm(4)) == "0");
  CHECK(to_string(pp("(1)(2)(5)(6)(3](4](7](8]", 8))
        == "(1)(2)(3](4](5)(6)(7](8]");
  // A chain is written from its source, placed by its least point.
  CHECK(to_string(pp("(3,1](2]", 3)) == "(3,1](2]");
}

TEST_CASE("key separates elements") {
  CHECK(pp("(1,2]", 2).key() != pp("(2,1]", 2).key());
  CHECK(pp("(1,2]", 2).key() == pp("(1,2]", 2).key());
}
