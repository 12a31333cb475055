#include "doctest.h"
#include "fixtures.hpp"

#include "semitrans/analysis.hpp"
#include "semitrans/error.hpp"
#include "semitrans/search.hpp"

using fixtures::pp;
using semitrans::AuditStatus;
using semitrans::PartialPerm;
using semitrans::Semigroup;

namespace {
  Semigroup set_of(std::initializer_list<char const*> items, std::size_t n) {
    std::vector<PartialPerm> v;
    for (auto const* s : items) {
      v.push_back(pp(s, n));
    }
    return Semigroup::unchecked(v);
  }

  using Blocks = std::vector<std::vector<semitrans::point_type>>;

  void check_fails(semitrans::AuditResult const& r) {
    INFO(r.name);
    CHECK(r.hypothesis_holds);
    CHECK_FALSE(r.conclusion_holds);
    CHECK(r.status() == AuditStatus::fail);
    CHECK_FALSE(r.witnesses.empty());
  }
}  // namespace

TEST_CASE("reach") {
  auto s = set_of({"(1)(2]", "(1](2)", "(1,2]", "0"}, 2);
  auto r = semitrans::reach_matrix(s);
  CHECK(r(1, 1));
  CHECK(r(2, 2));
  CHECK(r(1, 2));
  CHECK_FALSE(r(2, 1));

  auto zero = semitrans::reach_matrix(set_of({"0"}, 3));
  for (semitrans::point_type x = 1; x <= 3; ++x) {
    for (semitrans::point_type y = 1; y <= 3; ++y) {
      CHECK_FALSE(zero(x, y));
    }
  }

  // Example 1: x reaches y iff block(x) <= block(y).
  auto ex1 = fixtures::from_text(fixtures::example1);
  auto r1  = semitrans::reach_matrix(ex1);
  for (semitrans::point_type x = 1; x <= 8; ++x) {
    for (semitrans::point_type y = 1; y <= 8; ++y) {
      CHECK(r1(x, y) == ((x - 1) / 2 <= (y - 1) / 2));
    }
  }
}

TEST_CASE("semitransitivity") {
  auto ex1 = fixtures::from_text(fixtures::example1);
  CHECK(is_semitransitive(ex1));
  CHECK_FALSE(is_transitive(ex1));
  CHECK_FALSE(is_semitransitive(set_of({"(1)(2]", "(1](2)", "0"}, 2)));
  for (std::size_t n = 2; n <= 4; ++n) {
    auto all = Semigroup::unchecked(semitrans::enumerate_singular(n));
    CHECK(is_semitransitive(all));
  }
}

TEST_CASE("blocks") {
  CHECK(blocks(fixtures::from_text(fixtures::example1)).blocks
        == Blocks{{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(blocks(fixtures::from_text(fixtures::example2)).blocks
        == Blocks{{1, 2}, {3, 4, 5, 6}, {7, 8, 9, 10}});
  CHECK(blocks(set_of({"(1)(2]", "(1](2)", "(1,2]", "0"}, 2)).blocks
        == Blocks{{1}, {2}});
  CHECK_THROWS_AS(blocks(set_of({"(1)(2]", "(1](2)", "0"}, 2)),
                  semitrans::NotSemitransitive);
}

TEST_CASE("idempotent pair and block assignment") {
  auto ex1 = fixtures::from_text(fixtures::example1);
  auto gh  = idempotent_pair(ex1);
  REQUIRE(gh.has_value());
  CHECK(gh->g == pp("(1)(2)(3](4](5](6](7](8]", 8));
  auto a1 = block_assignment(blocks(ex1), gh->g, gh->h);
  CHECK(a1.a == std::vector<int>{1});
  CHECK(a1.b == std::vector<int>{2, 3, 4});
  CHECK(a1.shifts.at(1) == std::vector<int>{1, 2, 3});

  auto ex3 = fixtures::from_text(fixtures::example3);
  auto gh3 = idempotent_pair(ex3);
  REQUIRE(gh3.has_value());
  CHECK(gh3->g == pp("(1)(2)(5)(6)(3](4](7](8]", 8));
  auto a3 = block_assignment(blocks(ex3), gh3->g, gh3->h);
  CHECK(a3.a == std::vector<int>{1, 3});
  CHECK(a3.b == std::vector<int>{2, 4});
  CHECK(a3.shifts.at(1) == std::vector<int>{1, 3});
  CHECK(a3.shifts.at(3) == std::vector<int>{-1, 1});

  auto m2 = semitrans::type1(semitrans::make_params(1, 4, 2));
  auto gm = idempotent_pair(m2);
  REQUIRE(gm.has_value());
  auto am = block_assignment(blocks(m2), gm->g, gm->h);
  CHECK(am.a == std::vector<int>{1});
  CHECK(am.b == std::vector<int>{2});
  CHECK(am.shifts.at(1) == std::vector<int>{1});

  auto split = pp("(1)(2](3](4](5](6](7](8]", 8);
  CHECK_THROWS_AS(block_assignment(blocks(ex1), split, gh->h), semitrans::Error);
}

TEST_CASE("nilpotent partition") {
  auto ex1 = fixtures::from_text(fixtures::example1);
  auto gh  = *idempotent_pair(ex1);
  auto p1  = nilpotent_partition(ex1, gh.g, gh.h, blocks(ex1));
  CHECK(p1.n12.size() == 6);
  CHECK(p1.n21.empty());
  CHECK(p1.n.size() == 6);
  CHECK(p1.non_nilpotent.empty());
  for (auto const& lv : p1.levels) {
    CHECK(lv.uniform);
    CHECK(lv.min_jump >= 1);
  }

  auto ex3 = fixtures::from_text(fixtures::example3);
  auto gh3 = *idempotent_pair(ex3);
  auto p3  = nilpotent_partition(ex3, gh3.g, gh3.h, blocks(ex3));
  CHECK(p3.n12.size() == 4);
  CHECK(p3.n21.size() == 2);
  CHECK(p3.n.size() == 6);
}

TEST_CASE("audits pass on the worked examples") {
  for (auto const* text :
       {&fixtures::example1, &fixtures::example2, &fixtures::example3}) {
    auto s      = fixtures::from_text(*text);
    auto audits = audit_all(s);
    REQUIRE(audits.size() == 8);
    for (auto const& a : audits) {
      INFO(a.name);
      CHECK(a.status() == AuditStatus::pass);
    }
  }
}

TEST_CASE("audits on oversized input are vacuous") {
  auto all = Semigroup::unchecked(semitrans::enumerate_singular(3));
  auto r   = audit_two_idempotents(all);
  CHECK_FALSE(r.hypothesis_holds);
  CHECK(r.status() == AuditStatus::vacuous);
  CHECK(audit_lower_bound(all).status() == AuditStatus::pass);
}

TEST_CASE("corrupted inputs produce witnesses") {
  SUBCASE("two idempotents") {
    check_fails(audit_two_idempotents(set_of(
        {"(1)(2](3]", "(1](2)(3]", "(1](2](3)", "(1,2,3]", "(1,3](2]"}, 3)));
  }
  SUBCASE("block domains") {
    auto ex1 = fixtures::from_text(fixtures::example1);
    std::vector<PartialPerm> v(ex1.begin(), ex1.end());
    v.push_back(pp("(1)(2](3)(4](5](6](7](8]", 8));
    check_fails(audit_block_domains(Semigroup::unchecked(v)));
  }
  SUBCASE("auxiliary arrows") {
    check_fails(audit_aux_arrows(set_of(
        {"(1)(2)(3]", "(1](2](3)", "(1,2,3]", "(2,1](3]", "(1,3](2]", "0"}, 3)));
  }
  SUBCASE("group or nilpotent") {
    check_fails(audit_group_or_nilpotent(set_of({"(1)(2)(3]",
                                                 "(1)(2](3]",
                                                 "(1](2](3)",
                                                 "(1,2](3]",
                                                 "(1,3](2]",
                                                 "(2,3](1]"},
                                                3)));
  }
  SUBCASE("nilpotent without self-block arrows") {
    check_fails(audit_nilpotent_no_selfblock(
        set_of({"(1)(2)(3]", "(1](2](3)", "(1,2,3]", "(2,1,3]", "0"}, 3)));
  }
  SUBCASE("nilpotent count") {
    check_fails(audit_nilpotent_count(set_of({"(1)(2)(3](4]",
                                              "(1](2](3)(4)",
                                              "(1,2)(3](4]",
                                              "(1,3](2,4]",
                                              "(1,4](2,3]",
                                              "(3,4](1](2]",
                                              "0"},
                                             4)));
  }
  SUBCASE("divisibility") {
    check_fails(audit_divisibility(set_of({"(1)(2)(3](4](5]",
                                           "(1](2](3)(4)(5)",
                                           "(1,2)(3](4](5]",
                                           "(1](2](3,4,5)",
                                           "(1,3](2,4](5]",
                                           "(1,4](2,5](3]",
                                           "(1,5](2,3](4]",
                                           "0"},
                                          5)));
  }
  SUBCASE("lower bound") {
    check_fails(audit_lower_bound(set_of({"(1)(2]", "(1](2)", "(1,2]"}, 2)));
  }
}
