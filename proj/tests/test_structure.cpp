#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/quotient.hpp"
#include "hallbound/structure.hpp"
#include "oracle/brute.hpp"

using namespace hallbound;

namespace {

const std::vector<std::string> kOracleCorpus = {
    "C2", "C6", "C12", "D8", "D10", "S3", "S4", "A4", "A5", "S5", "PSL(2,7)", "SL(2,3)",
    "C2 x C2 x C2", "S3 x C3", "C2 wr C3", "A4 x C2"};

struct CapGuard {
  std::uint64_t saved = limits().enumeration_cap;
  explicit CapGuard(std::uint64_t cap) { limits().enumeration_cap = cap; }
  ~CapGuard() { limits().enumeration_cap = saved; }
};

std::set<oracle::ElemSet> as_sets(const std::vector<PermGroup>& gs) {
  std::set<oracle::ElemSet> out;
  for (const auto& g : gs)
    out.insert(oracle::elements_of(g));
  return out;
}

}  // namespace

TEST_CASE("minimal_normal_subgroups examples") {
  auto s4 = minimal_normal_subgroups(make_named("S4"));
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].order() == 4);
  CHECK(is_abelian(s4[0]));

  auto aa = minimal_normal_subgroups(make_named("A5 x A5"));
  REQUIRE(aa.size() == 2);
  CHECK(aa[0].order() == 60);
  CHECK(aa[1].order() == 60);
  CHECK(intersection(aa[0], aa[1]).is_trivial());

  auto c6 = minimal_normal_subgroups(make_named("C6"));
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].order() == 2);
  CHECK(c6[1].order() == 3);

  CHECK_THROWS_AS(minimal_normal_subgroups(PermGroup::trivial(3)), PreconditionError);
}

TEST_CASE("minimal_normal_subgroups agrees with the exhaustive scan") {
  for (const auto& name : kOracleCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    const auto all = oracle::elements_of(G);
    auto expected = oracle::minimal_normal_subgroups(G.degree(), all);
    CHECK(as_sets(minimal_normal_subgroups(G)) ==
          std::set<oracle::ElemSet>(expected.begin(), expected.end()));
  }
}

TEST_CASE("socle examples") {
  auto s5 = socle(make_named("S5"));
  CHECK(s5.socle.order() == 60);
  CHECK(s5.factors.size() == 1);
  CHECK(s5.abelian_flags == std::vector<bool>{false});

  auto wr = socle(make_named("A5 wr C2"));
  CHECK(wr.socle.order() == 3600);
  REQUIRE(wr.factors.size() == 2);
  CHECK(wr.abelian_flags == std::vector<bool>{false, false});

  auto s4 = socle(make_named("S4"));
  CHECK(s4.socle.order() == 4);
  CHECK(s4.abelian_flags == std::vector<bool>{true});

  CHECK(socle(PermGroup::trivial(2)).socle.is_trivial());
}

TEST_CASE("socle decomposition invariants") {
  for (const std::string name : {"S5", "A5 wr C2", "A5 x A5", "S4", "C6", "A5 x C6", "PSL(2,7)",
                                 "C2 x C2 x C2", "S3 x S3"}) {
    CAPTURE(name);
    auto G = make_named(name);
    auto d = socle(G);
    CHECK(is_normal(d.socle, G));
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      prod *= d.factors[i].order();
      CHECK(is_normal(d.factors[i], d.socle));
      CHECK(is_abelian(d.factors[i]) == d.abelian_flags[i]);
      if (!d.abelian_flags[i])
        CHECK(is_simple(d.factors[i]));
      for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
        CHECK(intersection(d.factors[i], d.factors[j]).is_trivial());
        for (const auto& a : d.factors[i].generators())
          for (const auto& b : d.factors[j].generators())
            CHECK(a * b == b * a);
      }
    }
    CHECK(prod == d.socle.order());
    // Each factor is minimal normal in the socle.
    if (d.socle.order() > 400)
      continue;
    const auto soc = oracle::elements_of(d.socle);
    auto mins = oracle::minimal_normal_subgroups(G.degree(), soc);
    const std::set<oracle::ElemSet> min_set(mins.begin(), mins.end());
    for (std::size_t i = 0; i < d.factors.size(); ++i)
      if (!d.abelian_flags[i])
        CHECK(min_set.count(oracle::elements_of(d.factors[i])) == 1);
  }
}

TEST_CASE("minimal normal subgroups above the enumeration cap are certified") {
  auto wr = make_named("A5 wr C2");
  auto exact = minimal_normal_subgroups(wr);
  {
    CapGuard guard(1000);
    auto sampled = minimal_normal_subgroups(wr);
    REQUIRE(sampled.size() == exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
      CHECK(sampled[i] == exact[i]);
    auto fs = simple_direct_factors(sampled[0]);
    REQUIRE(fs);
    CHECK(fs->size() == 2);
  }
  {
    CapGuard guard(1000);
    auto aa = minimal_normal_subgroups(make_named("A5 x A5 x A5"));
    CHECK(aa.size() == 3);
  }
  {
    // An abelian minimal normal subgroup cannot be certified by sampling.
    CapGuard guard(10);
    CHECK_THROWS_AS(minimal_normal_subgroups(make_named("S4")), CapExceeded);
  }
}

TEST_CASE("A5 wr A5 has the base as its only minimal normal subgroup") {
  auto G = make_named("A5 wr A5");
  auto mins = minimal_normal_subgroups(G);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 60ULL * 60 * 60 * 60 * 60);
  auto d = socle(G);
  CHECK(d.factors.size() == 5);
  for (const auto& T : d.factors)
    CHECK(T.order() == 60);
  CHECK(d.socle == mins[0]);
  auto q = quotient_by(G, d.socle);
  CHECK(q.target().order() == 60);
}

TEST_CASE("simple_direct_factors") {
  CHECK_FALSE(simple_direct_factors(make_named("C6")));
  CHECK_FALSE(simple_direct_factors(make_named("S5")));
  CHECK_FALSE(simple_direct_factors(make_named("A5 x C2")));
  auto f = simple_direct_factors(make_named("A5 x PSL(2,7)"));
  REQUIRE(f);
  CHECK(f->size() == 2);
  CHECK((*f)[0].order() == 60);
  CHECK((*f)[1].order() == 168);
}

TEST_CASE("has_trivial_centralizer agrees with element filtering") {
  for (const std::string name : {"S4", "A5", "S5", "A5 x A5", "C6", "D8", "A5 wr C2", "PSL(2,7)"}) {
    CAPTURE(name);
    auto G = make_named(name);
    for (const auto& M : minimal_normal_subgroups(G))
      CHECK(has_trivial_centralizer(G, M) == centralizer(G, M).is_trivial());
    CHECK(has_trivial_centralizer(G, G) == center(G).is_trivial());
    auto soc = socle(G).socle;
    CHECK(has_trivial_centralizer(G, soc) == centralizer(G, soc).is_trivial());
  }
}

TEST_CASE("is_soluble") {
  CHECK(is_soluble(make_named("S4")));
  CHECK_FALSE(is_soluble(make_named("A5")));
  CHECK(is_soluble(PermGroup::trivial(1)));
  for (const auto& name : kOracleCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    CHECK(is_soluble(G) == oracle::is_soluble(G.degree(), oracle::elements_of(G)));
  }
}

TEST_CASE("is_nilpotent") {
  CHECK(is_nilpotent(make_named("D8")));
  CHECK_FALSE(is_nilpotent(make_named("S3")));
  CHECK(is_nilpotent(make_named("C6")));
  CHECK(is_nilpotent(PermGroup::trivial(1)));
  for (const auto& name : kOracleCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    CHECK(is_nilpotent(G) == oracle::is_nilpotent(G.degree(), oracle::elements_of(G)));
  }
}

TEST_CASE("is_p_soluble") {
  CHECK(is_p_soluble(make_named("S4"), 2));
  CHECK_FALSE(is_p_soluble(make_named("A5"), 5));
  CHECK(is_p_soluble(make_named("A5"), 7));
  CHECK_FALSE(is_p_soluble(make_named("A5 x C7"), 2));
  CHECK(is_p_soluble(make_named("A5 x C7"), 7));
  CHECK_FALSE(is_p_soluble(make_named("A5 wr C2"), 3));
  CHECK(is_p_soluble(make_named("PSL(2,7)"), 5));
  CHECK_FALSE(is_p_soluble(make_named("A5 wr A5"), 5));
  CHECK_THROWS_AS(is_p_soluble(make_named("S4"), 4), PreconditionError);
}

TEST_CASE("is_simple") {
  CHECK(is_simple(make_named("A5")));
  CHECK(is_simple(make_named("PSL(2,7)")));
  CHECK_FALSE(is_simple(make_named("S4")));
  CHECK(is_simple(make_named("C7")));
  CHECK_FALSE(is_simple(make_named("C6")));
  CHECK_FALSE(is_simple(PermGroup::trivial(1)));
  CHECK_FALSE(is_simple(make_named("SL(2,5)")));
  for (const auto& name : kOracleCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    CHECK(is_simple(G) == oracle::is_simple(G.degree(), oracle::elements_of(G)));
  }
}

TEST_CASE("soluble_radical") {
  CHECK(soluble_radical(make_named("S4")).order() == 24);
  CHECK(soluble_radical(make_named("A5")).is_trivial());
  CHECK(soluble_radical(make_named("A5 x C6")).order() == 6);
  CHECK(soluble_radical(make_named("SL(2,5)")).order() == 2);
  CHECK(soluble_radical(make_named("A5 wr A5")).is_trivial());
  // Largest normal soluble subgroup, checked against every normal subgroup.
  for (const std::string name : {"S4", "A5 x C6", "SL(2,5)", "S5", "A4 x C2", "S3 x A5"}) {
    CAPTURE(name);
    auto G = make_named(name);
    auto R = soluble_radical(G);
    CHECK(is_normal(R, G));
    CHECK(is_soluble(R));
    const auto all = oracle::elements_of(G);
    const auto rset = oracle::elements_of(R);
    for (const auto& N : oracle::normal_subgroups(G.degree(), all))
      if (oracle::is_soluble(G.degree(), N))
        CHECK(oracle::is_subset(N, rset));
  }
}
