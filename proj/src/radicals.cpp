#include "hallbound/radicals.hpp"

#include "hallbound/config.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/quotient.hpp"
#include "hallbound/structure.hpp"

namespace hallbound {

std::string to_string(HeightKind kind) {
  switch (kind) {
    case HeightKind::fitting:
      return "fitting";
    case HeightKind::generalized_fitting:
      return "generalized_fitting";
    case HeightKind::p_length:
      return "p_length";
    case HeightKind::two_length:
      return "two_length";
  }
  return "?";
}

namespace {

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p))
    throw PreconditionError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// Iterates K -> preimage of step(G/K) from the trivial group up to G.
HeightCertificate ascend(const PermGroup& G, HeightKind kind,
                         PermGroup (*step)(const PermGroup&)) {
  HeightCertificate cert;
  cert.kind = kind;
  PermGroup K = PermGroup::trivial(G.degree());
  cert.series.push_back(K);
  while (K.order() != G.order()) {
    auto q = quotient_by(G, K);
    auto next = q.preimage(step(q.target()));
    if (next.order() <= K.order())
      throw EngineError("ascending series stalled at order " + std::to_string(K.order()));
    K = next;
    cert.series.push_back(K);
  }
  cert.height = static_cast<unsigned>(cert.series.size() - 1);
  return cert;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "sylow_subgroup");
  const auto target = p_part(G.order(), p);
  PermGroup P = PermGroup::trivial(G.degree());
  while (P.order() < target) {
    // An element of N_G(P) outside P whose p-th power lands in P extends P
    // to a p-group of order p|P|. Sylow's theorems guarantee one exists.
    auto N = P.is_trivial() ? G : normalizer(G, P);
    bool grown = false;
    N.for_each_element([&](const Permutation& x) {
      if (grown || P.contains(x) || !P.contains(x.pow(p)))
        return;
      auto gens = P.generators();
      gens.push_back(x);
      P = PermGroup(G.degree(), std::move(gens));
      grown = true;
    });
    if (!grown)
      throw EngineError("sylow_subgroup: no extending p-element found");
  }
  return P;
}

PermGroup pi_core(const PermGroup& G, const PrimeSet& pi) {
  return radical_by(G, [&](const PermGroup& N) { return pi.is_pi_number(N.order()); });
}

PermGroup p_core(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "p_core");
  return pi_core(G, PrimeSet{p});
}

PermGroup p_prime_core(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "p_prime_core");
  return radical_by(G, [&](const PermGroup& N) { return N.order() % p != 0; });
}

PermGroup p_soluble_radical(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "p_soluble_radical");
  // A minimal normal subgroup is p-soluble exactly when it is abelian or a
  // product of simple groups of order prime to p.
  return radical_by(G, [&](const PermGroup& N) { return is_abelian(N) || N.order() % p != 0; });
}

PermGroup fitting_subgroup(const PermGroup& G) {
  SubgroupBuilder b(G.degree());
  for (auto p : prime_divisors(G.order())) {
    const auto O = p_core(G, p);
    for (const auto& g : O.generators())
      b.add(g);
  }
  auto F = b.build();
  if (!is_nilpotent(F) || !is_normal(F, G))
    throw EngineError("fitting_subgroup: product of p-cores is not a normal nilpotent subgroup");
  return F;
}

PermGroup layer(const PermGroup& G) {
  if (is_soluble(G))
    return PermGroup::trivial(G.degree());
  auto F = fitting_subgroup(G);
  auto C = F.is_trivial() ? G : centralizer(G, F);
  auto Z = center(C);
  if (Z.order() == C.order())
    return PermGroup::trivial(G.degree());
  auto q = quotient_by(C, Z);
  return perfect_core(q.preimage(socle(q.target()).socle));
}

PermGroup generalized_fitting(const PermGroup& G) { return join(fitting_subgroup(G), layer(G)); }

HeightCertificate generalized_fitting_height(const PermGroup& G) {
  return ascend(G, HeightKind::generalized_fitting, generalized_fitting);
}

HeightCertificate fitting_height(const PermGroup& G) {
  if (!is_soluble(G))
    throw PreconditionError("fitting_height: group is not soluble");
  return ascend(G, HeightKind::fitting, fitting_subgroup);
}

HeightCertificate p_length(const PermGroup& G, std::uint64_t p) {
  require_prime(p, "p_length");
  if (!is_p_soluble(G, p))
    throw PreconditionError("p_length: group is not " + std::to_string(p) + "-soluble");
  HeightCertificate cert;
  cert.kind = p == 2 ? HeightKind::two_length : HeightKind::p_length;
  PermGroup K = PermGroup::trivial(G.degree());
  cert.series.push_back(K);
  while (K.order() != G.order()) {
    auto q = quotient_by(G, K);
    auto N = q.preimage(p_prime_core(q.target(), p));
    if (N.order() != K.order()) {
      cert.series.push_back(N);
      K = N;
      if (K.order() == G.order())
        break;
      q = quotient_by(G, K);
    }
    auto P = q.preimage(p_core(q.target(), p));
    if (P.order() == K.order())
      throw EngineError("p_length: upper p-series stalled");
    cert.series.push_back(P);
    ++cert.height;
    K = P;
  }
  return cert;
}

HeightCertificate two_length(const PermGroup& G) { return p_length(G, 2); }

bool is_nilpotent_by_sylows(const PermGroup& G) {
  for (auto p : prime_divisors(G.order()))
    if (!is_normal(sylow_subgroup(G, p), G))
      return false;
  return true;
}

}  // namespace hallbound
