#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallbound/perm_group.hpp"
#include "hallbound/primes.hpp"

namespace hallbound {

enum class HallStatus { found, proven_absent, unknown };

std::string to_string(HallStatus status);

struct HallSearchBudget {
  std::uint64_t random_attempts = 0;
  std::uint64_t greedy_passes = 0;
  std::uint64_t subgroups_examined = 0;
};

struct HallSearchResult {
  HallStatus status = HallStatus::unknown;
  std::optional<PermGroup> witness;
  HallSearchBudget budget;
  /// Why the search stopped short, when status is unknown.
  std::string note;
};

/// |H| is a pi-number and |G:H| a pi'-number. Throws unless H <= G.
bool is_hall_subgroup(const PermGroup& G, const PermGroup& H, const PrimeSet& pi);

/// Seeded random growth from pi-elements, then (soluble G) a deterministic
/// greedy pass, then optionally the exhaustive search of
/// pi_subgroup_classes. Never throws on size limits; reports unknown.
HallSearchResult find_hall_subgroup(const PermGroup& G, const PrimeSet& pi, bool exhaustive);

/// One representative of each conjugacy class of pi-subgroups whose order
/// divides the pi-part of |G|. Throws CapExceeded above the exhaustive cap.
std::vector<PermGroup> pi_subgroup_classes(const PermGroup& G, const PrimeSet& pi);

/// H cap N is Hall in N and HN/N is Hall in G/N.
bool check_hall_heredity(const PermGroup& G, const PermGroup& H, const PrimeSet& pi,
                         const PermGroup& N);

/// No subgroup of S with order the {2,p}-part of |S| is nilpotent, by
/// exhaustive search. S must be simple and p an odd prime dividing |S|.
bool confirm_no_nilpotent_hall_2p(const PermGroup& S, std::uint64_t p);

}  // namespace hallbound
