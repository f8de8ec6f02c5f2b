#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/quotient.hpp"
#include "oracle/brute.hpp"

using namespace hallbound;

TEST_CASE("make_named examples") {
  auto a5 = make_named("A5");
  CHECK(a5.degree() == 5);
  CHECK(a5.order() == 60);
  CHECK(oracle::elements_of(a5).size() == 60);

  auto psl = make_named("PSL(2,11)");
  CHECK(psl.degree() == 12);
  CHECK(psl.order() == 660);

  CHECK(make_named("C1").is_trivial());
}

TEST_CASE("constructor orders match closed forms") {
  const std::vector<std::string> names = {
      "C1", "C2", "C7", "C12", "D6", "D8", "D10", "S1", "S2", "S3", "S4", "S5", "S6", "S7",
      "S8", "S10", "A3", "A4", "A5", "A6", "A7", "A10", "PSL(2,2)", "PSL(2,3)", "PSL(2,4)",
      "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)", "PSL(2,11)", "PSL(2,13)", "SL(2,2)",
      "SL(2,3)", "SL(2,4)", "SL(2,5)", "A5 x A5", "A5 wr C2", "A5 wr A5", "C2 wr S3",
      "(A5 x C6) x C7"};
  for (const auto& name : names) {
    CAPTURE(name);
    auto spec = parse_group_spec(name);
    CHECK(make_named(name).order() == closed_form_order(spec));
  }
  CHECK(make_named("A5 wr A5").order() == 60ULL * 60 * 60 * 60 * 60 * 60);
  CHECK(make_named("A5 wr A5").degree() == 25);
}

TEST_CASE("name grammar") {
  CHECK(parse_group_spec("A5 wr C2").to_string() == "A5 wr C2");
  CHECK(parse_group_spec("(A5 x A5) wr C2").to_string() == "(A5 x A5) wr C2");
  CHECK(parse_group_spec("A5xA5").to_string() == "A5 x A5");
  CHECK_THROWS_AS(make_named("Q8"), PreconditionError);
  CHECK_THROWS_AS(make_named("S11"), PreconditionError);
  CHECK_THROWS_AS(make_named("PSL(2,16)"), PreconditionError);
  CHECK_THROWS_AS(make_named("SL(2,7)"), PreconditionError);
  CHECK_THROWS_AS(make_named("PSL(2,6)"), PreconditionError);
  CHECK_THROWS_AS(make_named("D7"), PreconditionError);
  CHECK_THROWS_AS(make_named("A5 x"), PreconditionError);
  CHECK_THROWS_AS(make_named("(A5"), PreconditionError);
}

TEST_CASE("direct_product") {
  auto a5 = make_named("A5");
  auto p = direct_product(a5, a5);
  CHECK(p.degree() == 10);
  CHECK(p.order() == 3600);
  CHECK(direct_product(a5, PermGroup::trivial(1)).order() == 60);
  auto c6 = direct_product(make_named("C2"), make_named("C3"));
  CHECK(c6.order() == 6);
  CHECK(is_abelian(c6));

  // Factors are normal and intersect trivially.
  auto left = PermGroup(10, {p.generators()[0], p.generators()[1]});
  auto right = PermGroup(10, {p.generators()[2], p.generators()[3]});
  CHECK(left.order() == 60);
  CHECK(is_normal(left, p));
  CHECK(is_normal(right, p));
  CHECK(intersection(left, right).is_trivial());
}

TEST_CASE("wreath_product") {
  auto a5 = make_named("A5");
  auto w = wreath_product(a5, make_named("C2"));
  CHECK(w.degree() == 10);
  CHECK(w.order() == 7200);
  CHECK(wreath_product(a5, PermGroup::trivial(1)) == a5);

  // Base is normal and the quotient has the order of the top group.
  auto base = PermGroup(10, {w.generators().begin(), w.generators().end() - 1});
  CHECK(base.order() == 3600);
  CHECK(is_normal(base, w));
  CHECK(quotient_by(w, base).target().order() == 2);
}

TEST_CASE("group file format") {
  const std::string text =
      "# A5 on five points\n"
      "degree 5\n"
      "(1 2 3)   # a 3-cycle\n"
      "\n"
      "(3 4 5)\n";
  auto g = parse_group_file(text);
  CHECK(g.degree() == 5);
  CHECK(g.order() == 60);
  CHECK_THROWS_AS(parse_group_file("(1 2)\n"), PreconditionError);
  CHECK_THROWS_AS(parse_group_file("degree 3\n(1 2 4)\n"), PreconditionError);
  CHECK_THROWS_AS(parse_group_file("degree 3\n(1 2)(2 3)\n"), PreconditionError);
  CHECK(parse_group_file("degree 4\n").is_trivial());
}
