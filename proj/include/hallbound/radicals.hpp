#pragma once

#include <string>
#include <vector>

#include "hallbound/perm_group.hpp"
#include "hallbound/primes.hpp"

namespace hallbound {

enum class HeightKind { fitting, generalized_fitting, p_length, two_length };

std::string to_string(HeightKind kind);

struct HeightCertificate {
  /// Strictly ascending normal series, trivial group first and G last.
  std::vector<PermGroup> series;
  /// Steps of the series for the Fitting kinds, p-factors for the length kinds.
  unsigned height = 0;
  HeightKind kind = HeightKind::fitting;
};

/// Grown greedily inside normalizers; enumerates G.
PermGroup sylow_subgroup(const PermGroup& G, std::uint64_t p);

/// O_pi(G), the largest normal pi-subgroup.
PermGroup pi_core(const PermGroup& G, const PrimeSet& pi);
PermGroup p_core(const PermGroup& G, std::uint64_t p);
/// O_p'(G)
PermGroup p_prime_core(const PermGroup& G, std::uint64_t p);

/// R_p(G), the largest normal p-soluble subgroup.
PermGroup p_soluble_radical(const PermGroup& G, std::uint64_t p);

PermGroup fitting_subgroup(const PermGroup& G);
/// E(G), the product of the subnormal quasisimple subgroups.
PermGroup layer(const PermGroup& G);
/// F*(G) = F(G)E(G)
PermGroup generalized_fitting(const PermGroup& G);

HeightCertificate generalized_fitting_height(const PermGroup& G);
/// Throws PreconditionError unless G is soluble.
HeightCertificate fitting_height(const PermGroup& G);
/// Upper p-series. Throws PreconditionError unless G is p-soluble.
HeightCertificate p_length(const PermGroup& G, std::uint64_t p);
HeightCertificate two_length(const PermGroup& G);

/// Every Sylow subgroup is normal.
bool is_nilpotent_by_sylows(const PermGroup& G);

}  // namespace hallbound
