#include <catch_amalgamated.hpp>

#include "grammic/grammic.hpp"

using namespace grammic;

TEST_CASE("identity parsing and display", "[identities]") {
  Identity id = parse_identity("xyyx = yxxy");
  CHECK(id.lhs == Word{1, 2, 2, 1});
  CHECK(id.rhs == Word{2, 1, 1, 2});
  CHECK(id.num_vars == 2);
  CHECK(identity_to_string(id) == "abba = baab");
  CHECK(is_balanced(id));
  CHECK(!is_trivial(id));

  CHECK(parse_identity("ca=ac").lhs == Word{2, 1});  // variables index alphabetically
  CHECK_THROWS_AS(parse_identity("xy"), misuse_error);
  CHECK_THROWS_AS(parse_identity("x=y=z"), misuse_error);
  CHECK_THROWS_AS(parse_identity("=x"), misuse_error);
  CHECK_THROWS_AS(parse_identity("x2=x"), misuse_error);
}

TEST_CASE("substitution", "[identities]") {
  Identity id = parse_identity("xyx=yxx");
  Assignment asg{{2, 1}, {}};
  CHECK(substitute(id.lhs, asg) == Word{2, 1, 2, 1});
  CHECK(substitute(id.rhs, asg) == Word{2, 1, 2, 1});
}

TEST_CASE("unbalanced identities fall to a constructive assignment", "[identities]") {
  Identity id = parse_identity("xx=xxx");
  FalsifyResult r = falsify_unbalanced(id);
  CHECK(r.lhs_image.size() != r.rhs_image.size());
  CHECK_THROWS_AS(falsify_unbalanced(parse_identity("xy=yx")), misuse_error);

  // Same raw length but uneven use of one variable.
  Identity uneven = parse_identity("xxy=xyy");
  FalsifyResult s = falsify_unbalanced(uneven);
  CHECK(s.lhs_image.size() != s.rhs_image.size());

  UnbalancedSweep sweep = unbalanced_sweep(3, 2);
  CHECK(sweep.ok());
  CHECK(sweep.checked > 0);
}

TEST_CASE("balanced search finds small witnesses", "[identities]") {
  Identity comm = parse_identity("xy=yx");
  auto r = falsify(comm, 2, 2);
  REQUIRE(r.has_value());
  CHECK(r->assignment == Assignment{{1}, {2}});
  CHECK(r->lhs_image == Word{1, 2});
  CHECK(r->rhs_image == Word{2, 1});
  CHECK(!equiv(r->lhs_image, r->rhs_image, 2));

  // Deterministic: the same witness twice.
  CHECK(falsify(comm, 2, 2)->assignment == r->assignment);

  // Commutativity holds over a single letter.
  CHECK(!falsify(comm, 1, 4).has_value());
}

TEST_CASE("an identity that needs images beyond single letters", "[identities]") {
  Identity id = parse_identity("xyyx=yxxy");
  CHECK(!falsify(id, 5, 1).has_value());
  auto r = falsify(id, 5, 2);
  REQUIRE(r.has_value());
  CHECK(r->assignment == Assignment{{1}, {1, 2}});
  CHECK(!equiv(r->lhs_image, r->rhs_image, 5));
}

TEST_CASE("identities that hold", "[identities]") {
  // Adjan's identity separates free from non-free; it holds at rank 2.
  Identity adjan = parse_identity("xyyxxyxyyx=xyyxyxxyyx");
  CHECK(is_balanced(adjan));
  CHECK(!falsify(adjan, 2, 2).has_value());

  // Identities surviving the search over both sides stay balanced.
  CHECK_THROWS_AS(falsify(parse_identity("abcdef=fedcba"), 3, 6, 100), budget_error);
}

TEST_CASE("shortest falsified lengths per rank", "[identities]") {
  MinLengthReport r3 = min_length_check(3);
  CHECK(r3.ok());
  CHECK(r3.side_limit == 2);
  CHECK(r3.falsified == r3.entries.size());
  CHECK(r3.balanced < r3.entries.size());

  // Every identity with sides of length at most n-1 fails at rank n.
  CHECK(min_length_check(4).ok());
}
