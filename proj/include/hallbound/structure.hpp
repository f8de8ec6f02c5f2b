#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hallbound/perm_group.hpp"

namespace hallbound {

struct SocleDecomposition {
  PermGroup socle;
  /// Simple direct factors of the non-abelian minimal normal subgroups, and
  /// the abelian minimal normal subgroups kept whole.
  std::vector<PermGroup> factors;
  std::vector<bool> abelian_flags;
};

/// All inclusion-minimal nontrivial normal subgroups, sorted by order and
/// then by generators.
///
/// Up to the enumeration cap every conjugacy class of prime-order elements is
/// visited and the minimal normal closures are kept. Above the cap, closures
/// of sampled prime-order elements are decomposed into simple direct factors
/// and the result is accepted only if it is certified complete (the found
/// subgroups are non-abelian and their product has trivial centralizer);
/// otherwise CapExceeded is thrown.
///
/// Throws PreconditionError for the trivial group.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G);

SocleDecomposition socle(const PermGroup& G);

/// Splits N into non-abelian simple direct factors, or returns nullopt when
/// N is not such a product.
std::optional<std::vector<PermGroup>> simple_direct_factors(const PermGroup& N);

/// True when no non-identity element of G centralizes S. Searches the
/// centralizer of S in the full symmetric group orbit by orbit.
bool has_trivial_centralizer(const PermGroup& G, const PermGroup& S);

bool is_soluble(const PermGroup& G);
/// Lower central series reaches the identity.
bool is_nilpotent(const PermGroup& G);
bool is_p_soluble(const PermGroup& G, std::uint64_t p);
bool is_simple(const PermGroup& G);
bool is_perfect(const PermGroup& G);

/// Largest normal subgroup built from minimal normal subgroups passing
/// `admissible` in successive quotients. Correct for any class of groups
/// closed under subgroups, quotients and extensions.
PermGroup radical_by(const PermGroup& G, const std::function<bool(const PermGroup&)>& admissible);

PermGroup soluble_radical(const PermGroup& G);

}  // namespace hallbound
