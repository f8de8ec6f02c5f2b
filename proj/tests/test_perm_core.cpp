#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <thread>

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/group_ops.hpp"
#include "oracle/brute.hpp"

using namespace hallbound;

namespace {

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c) {
  return Permutation::from_cycles(n, c);
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

PermGroup v4() { return PermGroup(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}); }

const std::vector<std::string> kSmallCorpus = {
    "C1", "C6", "C12", "D8", "D10", "S3", "S4", "A4", "A5", "S5", "PSL(2,7)", "SL(2,3)",
    "SL(2,5)", "A5 x C6", "A5 wr C2", "PSL(2,11)", "A6", "S4 x C3", "C2 wr S3"};

}  // namespace

TEST_CASE("compose uses left-to-right application") {
  auto t = cyc(2, {{0, 1}});
  CHECK(compose(t, t).is_identity());

  auto c = cyc(3, {{0, 1, 2}});
  CHECK(compose(c, c) == cyc(3, {{0, 2, 1}}));

  // a then b: 0 -a-> 1 -b-> 2
  auto a = cyc(3, {{0, 1}});
  auto b = cyc(3, {{1, 2}});
  CHECK(compose(a, b)(0) == 2);

  std::mt19937_64 rng(7);
  auto r = random_perm(8, rng);
  CHECK(compose(r, Permutation::identity(8)) == r);
  CHECK(compose(r, r.inverse()).is_identity());

  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), PreconditionError);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), PreconditionError);
  CHECK_THROWS_AS(parse_cycles(3, "(1 4)"), PreconditionError);
  CHECK(parse_cycles(5, " (1 2 3)(4,5) ") == cyc(5, {{0, 1, 2}, {3, 4}}));
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).to_cycle_string() == "(1 2 3)(4 5)");
}

TEST_CASE("group_from_generators orders match closure enumeration") {
  auto s5 = group_from_generators(5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(s5.order() == 120);
  CHECK(oracle::elements_of(s5).size() == 120);

  auto triv = group_from_generators(4, {});
  CHECK(triv.order() == 1);

  auto a5 = group_from_generators(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})});
  CHECK(a5.order() == 60);
  CHECK(oracle::elements_of(a5).size() == 60);

  CHECK_THROWS_AS(group_from_generators(5, {Permutation::identity(4)}), PreconditionError);
}

TEST_CASE("order of standard groups") {
  CHECK(make_named("A5").order() == 60);
  CHECK(make_named("C1").order() == 1);
  auto psl27 = make_named("PSL(2,7)");
  CHECK(psl27.degree() == 8);
  CHECK(psl27.order() == 168);
  CHECK(oracle::elements_of(psl27).size() == 168);
}

TEST_CASE("contains") {
  auto a5 = make_named("A5");
  CHECK(a5.contains(cyc(5, {{0, 1, 2}})));
  CHECK_FALSE(a5.contains(cyc(5, {{0, 1}})));
  CHECK(a5.contains(Permutation::identity(5)));
  CHECK_THROWS_AS(a5.contains(Permutation::identity(6)), PreconditionError);
}

TEST_CASE("orbit") {
  auto a5 = make_named("A5");
  auto orb = a5.orbit(0);
  std::sort(orb.begin(), orb.end());
  CHECK(orb == std::vector<Point>{0, 1, 2, 3, 4});
  CHECK(PermGroup::trivial(4).orbit(2) == std::vector<Point>{2});
  CHECK(PermGroup(4, {cyc(4, {{0, 1}})}).orbit(3) == std::vector<Point>{3});
  CHECK_THROWS_AS(a5.orbit(5), PreconditionError);
}

TEST_CASE("normal_closure") {
  auto s4 = make_named("S4");
  auto a4 = normal_closure(s4, cyclic_subgroup(cyc(4, {{0, 1, 2}})));
  CHECK(a4.order() == 12);
  CHECK(oracle::same(a4, oracle::normal_closure(4, oracle::elements_of(s4),
                                                {oracle::to_elem(cyc(4, {{0, 1, 2}}))})));

  auto a5 = make_named("A5");
  for (const auto& x : a5.elements())
    if (!x.is_identity())
      CHECK(normal_closure(a5, x).order() == 60);

  CHECK(normal_closure(s4, PermGroup::trivial(4)).is_trivial());
  CHECK_THROWS_AS(normal_closure(a5, cyclic_subgroup(cyc(5, {{0, 1}}))), PreconditionError);
}

TEST_CASE("commutator_subgroup") {
  auto s4 = make_named("S4");
  auto d = commutator_subgroup(s4, s4, s4);
  CHECK(d.order() == 12);
  CHECK(oracle::same(d, oracle::commutator_subgroup(4, oracle::elements_of(s4),
                                                    oracle::elements_of(s4))));
  auto a5 = make_named("A5");
  CHECK(commutator_subgroup(a5, a5, a5).order() == 60);
  CHECK(commutator_subgroup(s4, PermGroup::trivial(4), s4).is_trivial());
  CHECK_THROWS_AS(commutator_subgroup(s4, s4, make_named("A4")), PreconditionError);
}

TEST_CASE("centralizer and center") {
  auto s4 = make_named("S4");
  auto c = centralizer(s4, v4());
  CHECK(c == v4());
  CHECK(centralizer(s4, PermGroup::trivial(4)) == s4);

  auto s3 = make_named("S3");
  auto c3 = cyclic_subgroup(cyc(3, {{0, 1, 2}}));
  CHECK(centralizer(s3, c3) == c3);

  CHECK(center(s3).is_trivial());
  auto c12 = make_named("C12");
  CHECK(center(c12) == c12);

  auto sl25 = make_named("SL(2,5)");
  CHECK(sl25.degree() == 24);
  auto z = center(sl25);
  CHECK(z.order() == 2);
  CHECK(oracle::same(z, oracle::centralizer(oracle::elements_of(sl25), oracle::elements_of(sl25))));

  // Every element of the result commutes with every element of the target.
  for (const auto& g : c.elements())
    for (const auto& s : v4().elements())
      CHECK(g * s == s * g);
}

TEST_CASE("centralizer refuses groups above the enumeration cap") {
  const auto saved = limits().enumeration_cap;
  limits().enumeration_cap = 100;
  auto s5 = make_named("S5");
  CHECK_THROWS_AS(centralizer(s5, s5), CapExceeded);
  limits().enumeration_cap = saved;
}

TEST_CASE("intersection") {
  auto a4 = make_named("A4");
  auto t = cyclic_subgroup(cyc(4, {{0, 1}}));
  CHECK(intersection(a4, t).is_trivial());
  CHECK(intersection(a4, a4) == a4);
  auto d = cyclic_subgroup(cyc(4, {{0, 1}, {2, 3}}));
  CHECK(intersection(v4(), d) == d);
}

TEST_CASE("is_normal") {
  auto s4 = make_named("S4");
  CHECK(is_normal(v4(), s4));
  CHECK_FALSE(is_normal(cyclic_subgroup(cyc(4, {{0, 1}})), s4));
  CHECK(is_normal(s4, s4));
  CHECK_THROWS_AS(is_normal(make_named("S4"), make_named("A4")), PreconditionError);
}

TEST_CASE("orbit-stabilizer and Lagrange on the corpus") {
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    for (Point x = 0; x < G.degree(); ++x) {
      auto stab = filter_subgroup(G, [&](const Permutation& g) { return g(x) == x; });
      CHECK(G.orbit(x).size() * stab.order() == G.order());
      CHECK(G.order() % stab.order() == 0);
    }
    CHECK(G.order() % derived_subgroup(G).order() == 0);
    CHECK(G.order() % center(G).order() == 0);
  }
}

TEST_CASE("membership agrees with enumeration on random permutations") {
  std::mt19937_64 rng(limits().seed);
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    if (G.order() > 5000)
      continue;
    auto all = oracle::elements_of(G);
    for (int i = 0; i < 100; ++i) {
      // Mix random elements of G with random elements of Sym(n).
      Permutation x = i % 2 == 0 ? G.random_element(rng) : random_perm(G.degree(), rng);
      CHECK(G.contains(x) == (all.count(oracle::to_elem(x)) == 1));
    }
  }
}

TEST_CASE("normal closure is normal, contains S, and is minimal") {
  std::mt19937_64 rng(3);
  for (const auto& name : kSmallCorpus) {
    CAPTURE(name);
    auto G = make_named(name);
    if (G.order() > 600)
      continue;
    const auto all = oracle::elements_of(G);
    const auto normals = oracle::normal_subgroups(G.degree(), all);
    for (int i = 0; i < 5; ++i) {
      auto x = G.random_element(rng);
      auto N = normal_closure(G, x);
      CHECK(is_normal(N, G));
      CHECK(N.contains(x));
      const auto nset = oracle::elements_of(N);
      for (const auto& M : normals)
        if (M.count(oracle::to_elem(x)) && oracle::is_subset(M, nset))
          CHECK(M == nset);
    }
  }
}

TEST_CASE("a group handle is safe to share across threads") {
  auto G = make_named("A5 wr C2");
  std::vector<std::thread> workers;
  std::vector<std::uint64_t> orders(8);
  for (std::size_t i = 0; i < orders.size(); ++i)
    workers.emplace_back([&, i] { orders[i] = G.order(); });
  for (auto& w : workers)
    w.join();
  for (auto o : orders)
    CHECK(o == 7200);
}
