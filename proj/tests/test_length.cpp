#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/length.hpp"
#include "hallbound/primes.hpp"
#include "hallbound/quotient.hpp"
#include "hallbound/radicals.hpp"
#include "hallbound/structure.hpp"

using namespace hallbound;

namespace {

const std::vector<std::string> kCorpus = {
    "C1", "C6", "D10", "S3", "S4", "A4", "A5", "S5", "PSL(2,7)", "SL(2,3)", "SL(2,5)",
    "A5 x C2", "A5 x C6", "A5 x S3", "C2 wr S3", "S3 x S3", "PSL(2,8)", "PSL(2,11)", "A6", "S6",
    "S5 x C3", "PSL(2,7) x C2", "SL(2,4)", "S4 x C3"};

// Normal subgroups that are cheap to name: minimal normals, derived
// subgroup, soluble radical, socle, and the kernel series terms.
std::vector<PermGroup> some_normal_subgroups(const PermGroup& G) {
  std::vector<PermGroup> out;
  if (G.is_trivial())
    return out;
  for (const auto& M : minimal_normal_subgroups(G))
    out.push_back(M);
  out.push_back(derived_subgroup(G));
  out.push_back(soluble_radical(G));
  out.push_back(socle(G).socle);
  for (auto p : prime_divisors(G.order()))
    for (const auto& K : kernel_series(G, p).kernels)
      out.push_back(K);
  return out;
}

}  // namespace

TEST_CASE("p_kernel examples") {
  auto s4 = make_named("S4");
  CHECK(p_kernel(s4, 3) == s4);
  auto wr = make_named("A5 wr C2");
  auto k = p_kernel(wr, 3);
  CHECK(k.order() == 3600);
  CHECK(is_normal(k, wr));
  auto a5 = make_named("A5");
  CHECK(p_kernel(a5, 5) == a5);
  CHECK_THROWS_AS(p_kernel(a5, 6), PreconditionError);
}

TEST_CASE("kernel_series examples") {
  auto s = kernel_series(make_named("S4"), 2);
  CHECK(s.lambda == 0);
  CHECK(s.kernels.empty());
  auto a = kernel_series(make_named("A5"), 5);
  CHECK(a.lambda == 1);
  CHECK(a.socle_factor_counts == std::vector<unsigned>{1});
  auto big = kernel_series(make_named("A5 wr A5"), 5);
  CHECK(big.lambda == 2);
  REQUIRE(big.kernels.size() == 2);
  CHECK(big.kernels[0].order() == 60ULL * 60 * 60 * 60 * 60);
  CHECK(big.socle_factor_counts == std::vector<unsigned>{5, 1});
  CHECK(big.kernels[1].order() == big.group.order());
}

TEST_CASE("lambda_oracle examples") {
  CHECK(lambda_oracle(make_named("S4"), 2) == 0);
  CHECK(lambda_oracle(make_named("A5"), 3) == 1);
  auto aa = make_named("A5 x A5");
  CHECK_THROWS_AS(lambda_oracle(aa, 5), CapExceeded);
  CHECK(lambda_oracle(aa, 5, 3600) == 1);
  CHECK(kernel_series(aa, 5).lambda == 1);
}

TEST_CASE("check_kernel_lemma examples") {
  CHECK(check_kernel_lemma(make_named("S4"), 3));
  CHECK(check_kernel_lemma(make_named("A5"), 5));
  CHECK(check_kernel_lemma(make_named("A5 wr C2"), 3));
  auto big = make_named("A5 wr A5");
  CHECK(check_kernel_lemma(big, 5));
  CHECK(kernel_series(p_kernel(big, 5), 5).lambda == 1);
}

TEST_CASE("kernel series agrees with the normal-series oracle") {
  for (const auto& name : kCorpus) {
    auto G = make_named(name);
    if (G.order() > 2000)
      continue;
    for (auto p : prime_divisors(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(kernel_series(G, p).lambda == lambda_oracle(G, p));
    }
  }
}

TEST_CASE("kernel series invariants") {
  for (const auto& name : kCorpus) {
    auto G = make_named(name);
    for (auto p : prime_divisors(G.order())) {
      CAPTURE(name);
      CAPTURE(p);
      auto s = kernel_series(G, p);
      CHECK(s.lambda == s.kernels.size());
      CHECK((s.lambda == 0) == is_p_soluble(G, p));
      for (std::size_t i = 0; i < s.kernels.size(); ++i) {
        CHECK(is_normal(s.kernels[i], G));
        if (i > 0)
          CHECK(s.kernels[i].contains(s.kernels[i - 1]));
        CHECK(is_p_soluble(quotient_by(G, s.kernels[i]).target(), p) ==
              (i + 1 == s.kernels.size()));
      }
      CHECK(check_kernel_lemma(G, p));
    }
  }
}

TEST_CASE("non-p-soluble length is monotone on normal subgroups and quotients") {
  for (const auto& name : kCorpus) {
    auto G = make_named(name);
    for (const auto& N : some_normal_subgroups(G)) {
      auto Q = quotient_by(G, N).target();
      for (auto p : prime_divisors(G.order())) {
        CAPTURE(name);
        CAPTURE(N.order());
        CAPTURE(p);
        const auto lg = non_p_soluble_length(G, p);
        const auto ln = non_p_soluble_length(N, p);
        const auto lq = non_p_soluble_length(Q, p);
        CHECK(ln <= lg);
        CHECK(lq <= lg);
        CHECK(lg <= ln + lq);
      }
    }
  }
}

TEST_CASE("subadditivity on products and wreath products") {
  struct Case {
    std::string group;
    std::size_t base_generators;
  };
  // The first base_generators generators span the normal base.
  for (const Case& c : {Case{"A5 wr C2", 4}, Case{"A5 x A5", 2}, Case{"PSL(2,7) x A5", 2},
                        Case{"A5 wr C3", 6}}) {
    CAPTURE(c.group);
    auto G = make_named(c.group);
    auto gens = G.generators();
    auto N = PermGroup(G.degree(), {gens.begin(), gens.begin() + c.base_generators});
    REQUIRE(is_normal(N, G));
    auto Q = quotient_by(G, N).target();
    for (auto p : prime_divisors(G.order())) {
      CAPTURE(p);
      CHECK(non_p_soluble_length(G, p) <=
            non_p_soluble_length(N, p) + non_p_soluble_length(Q, p));
    }
  }
}
