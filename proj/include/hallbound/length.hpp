#pragma once

#include <vector>

#include "hallbound/perm_group.hpp"

namespace hallbound {

struct KernelSeries {
  PermGroup group;
  std::uint64_t p = 0;
  /// K_{p,1} <= K_{p,2} <= ... ; empty when the group is p-soluble.
  std::vector<PermGroup> kernels;
  unsigned lambda = 0;
  /// Number of socle factors of G/R_p at each level.
  std::vector<unsigned> socle_factor_counts;
};

/// K_p(G): kernel of the action of G on the simple factors of the socle of
/// G/R_p(G), by conjugation. Equal to G when G is p-soluble.
PermGroup p_kernel(const PermGroup& G, std::uint64_t p);

/// Iterates p_kernel through successive quotients until the quotient is
/// p-soluble. lambda is the non-p-soluble length.
KernelSeries kernel_series(const PermGroup& G, std::uint64_t p);

inline unsigned non_p_soluble_length(const PermGroup& G, std::uint64_t p) {
  return kernel_series(G, p).lambda;
}

/// Minimum number of non-p-soluble factors over every normal series whose
/// factors are p-soluble or products of simple groups of order divisible by
/// p. Searches the whole normal-subgroup lattice; throws CapExceeded when
/// |G| > max_order.
unsigned lambda_oracle(const PermGroup& G, std::uint64_t p, std::uint64_t max_order = 2000);

/// K_p(G) has non-p-soluble length at most 1, and when R_p(G) != G the
/// quotient of K_p(G) by the preimage of the socle of G/R_p(G) is soluble.
bool check_kernel_lemma(const PermGroup& G, std::uint64_t p);

}  // namespace hallbound
