#include "hallbound/length.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "hallbound/config.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/primes.hpp"
#include "hallbound/quotient.hpp"
#include "hallbound/radicals.hpp"
#include "hallbound/structure.hpp"

namespace hallbound {

namespace {

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p))
    throw PreconditionError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

// Subgroup of G fixing every factor under conjugation. G acts on the
// factors and, faithfully, on its own points; the pointwise stabilizer of
// the factor points in the combined action, restricted to the original
// points, is the kernel.
PermGroup factor_stabilizer(const PermGroup& G, const std::vector<PermGroup>& factors) {
  const std::size_t m = factors.size();
  const std::size_t n = G.degree();
  SubgroupBuilder combined(m + n);
  for (const auto& g : G.generators()) {
    std::vector<Point> img(m + n);
    for (std::size_t i = 0; i < m; ++i) {
      auto C = conjugate_group(factors[i], g);
      std::size_t k = 0;
      while (k < m && !(factors[k].order() == C.order() && factors[k].contains(C)))
        ++k;
      if (k == m)
        throw EngineError("p_kernel: conjugate of a socle factor is not a socle factor");
      img[i] = static_cast<Point>(k);
    }
    for (std::size_t x = 0; x < n; ++x)
      img[m + x] = static_cast<Point>(m + g(static_cast<Point>(x)));
    combined.add(Permutation(img));
  }
  const auto A = combined.build();
  SubgroupBuilder kernel(n);
  for (const auto& s : A.chain().generators(m)) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<Point>(s(static_cast<Point>(m + x)) - m);
    kernel.add(Permutation(img));
  }
  return kernel.build();
}

struct KernelStep {
  PermGroup kernel;
  unsigned factors = 0;
};

KernelStep p_kernel_step(const PermGroup& G, std::uint64_t p) {
  const auto R = p_soluble_radical(G, p);
  if (R.order() == G.order())
    return {G, 0};
  auto q = quotient_by(G, R);
  const auto soc = socle(q.target());
  for (bool ab : soc.abelian_flags)
    if (ab)
      throw EngineError("p_kernel: abelian socle factor above the p-soluble radical");
  auto K = q.preimage(factor_stabilizer(q.target(), soc.factors));
  return {K, static_cast<unsigned>(soc.factors.size())};
}

}  // namespace

PermGroup p_kernel(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "p_kernel");
  return p_kernel_step(G, p).kernel;
}

KernelSeries kernel_series(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "kernel_series");
  KernelSeries out;
  out.group = G;
  out.p = p;
  PermGroup K = PermGroup::trivial(G.degree());
  for (;;) {
    auto q = quotient_by(G, K);
    if (is_p_soluble(q.target(), p))
      break;
    auto step = p_kernel_step(q.target(), p);
    auto next = q.preimage(step.kernel);
    if (next.order() <= K.order())
      throw EngineError("kernel_series: series failed to ascend");
    out.kernels.push_back(next);
    out.socle_factor_counts.push_back(step.factors);
    K = next;
  }
  out.lambda = static_cast<unsigned>(out.kernels.size());
  return out;
}

unsigned lambda_oracle(const PermGroup& G, std::uint64_t p, std::uint64_t max_order) {
  require_prime(p, "lambda_oracle");
  if (G.order() > max_order)
    throw CapExceeded("lambda_oracle: group order " + std::to_string(G.order()) +
                      " exceeds the oracle limit " + std::to_string(max_order));

  // Normal closures of single elements, then joins to a fixed point. Every
  // normal subgroup is the join of the closures of its elements.
  std::vector<PermGroup> lattice{PermGroup::trivial(G.degree())};
  auto add = [&](const PermGroup& N) {
    for (const auto& M : lattice)
      if (M.order() == N.order() && M.contains(N))
        return false;
    lattice.push_back(N);
    return true;
  };
  std::unordered_set<Permutation, PermutationHash> seen;
  G.for_each_element([&](const Permutation& x) {
    if (!seen.insert(x).second)
      return;
    std::vector<Permutation> cls{x};
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (const auto& g : G.generators()) {
        auto y = conjugate(cls[head], g);
        if (seen.insert(y).second)
          cls.push_back(std::move(y));
      }
    add(normal_closure(G, x));
  });
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = lattice;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (!snapshot[i].contains(snapshot[j]) && !snapshot[j].contains(snapshot[i]))
          grew = add(join(snapshot[i], snapshot[j])) || grew;
  }
  std::sort(lattice.begin(), lattice.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });

  // Shortest path from 1 to G; an edge costs 0 across a p-soluble factor and
  // 1 across a product of simple groups of order divisible by p.
  const unsigned inf = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> best(lattice.size(), inf);
  best[0] = 0;
  for (std::size_t j = 1; j < lattice.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (best[i] == inf || lattice[i].order() >= lattice[j].order() ||
          !lattice[j].contains(lattice[i]))
        continue;
      const auto Q = quotient_by(lattice[j], lattice[i]).target();
      if (is_p_soluble(Q, p)) {
        best[j] = std::min(best[j], best[i]);
        continue;
      }
      if (best[i] + 1 >= best[j])
        continue;
      auto fs = simple_direct_factors(Q);
      if (fs && std::all_of(fs->begin(), fs->end(),
                            [&](const PermGroup& T) { return T.order() % p == 0; }))
        best[j] = best[i] + 1;
    }
  if (best.back() == inf)
    throw EngineError("lambda_oracle: no admissible normal series");
  return best.back();
}

bool check_kernel_lemma(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "check_kernel_lemma");
  const auto K = p_kernel(G, p);
  if (kernel_series(K, p).lambda > 1)
    return false;
  const auto R = p_soluble_radical(G, p);
  if (R.order() == G.order())
    return true;
  auto q = quotient_by(G, R);
  const auto S = q.preimage(socle(q.target()).socle);
  // K/S is soluble exactly when the perfect core of K lies in S.
  return K.contains(S) && S.contains(perfect_core(K));
}

}  // namespace hallbound
