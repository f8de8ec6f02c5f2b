#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallbound/hall.hpp"
#include "hallbound/perm_group.hpp"
#include "hallbound/primes.hpp"

namespace hallbound {

inline constexpr int kReportSchema = 1;

/// Claim outcomes for one (G, pi, p) instance. An empty optional means the
/// claim was not evaluated.
struct ClaimChecks {
  std::optional<bool> theorem;      // lambda_p(G) <= h*(H)
  std::optional<bool> corollary;    // lambda_p(G) <= 2 l_2(H) + 1, plus the T route
  std::optional<bool> proposition;  // F*(H) <= K_p(G)
  std::optional<bool> lemma_F;      // F(H) <= K_p(G)
  std::optional<bool> kernel_lemma; // lambda_p(K_p(G)) <= 1, K/soc preimage soluble
  friend bool operator==(const ClaimChecks&, const ClaimChecks&) = default;
};

struct InstanceReport {
  std::string group_name;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  std::uint64_t p = 0;
  PrimeSet pi;

  unsigned lambda_p = 0;
  std::vector<std::uint64_t> kernel_orders;

  HallStatus hall_status = HallStatus::unknown;
  std::optional<std::uint64_t> hall_order;
  std::optional<unsigned> h_star_H;
  std::vector<std::uint64_t> h_star_series;  // orders of the F* series of H
  std::optional<unsigned> l2_H;

  // Corollary proof route through a Hall {2,p}-subgroup T of H.
  std::optional<std::uint64_t> t_order;
  std::optional<unsigned> fitting_height_T;
  std::optional<unsigned> l2_T;

  std::optional<unsigned> kernel_lambda;  // lambda_p(K_p(G))

  ClaimChecks checks;
  std::optional<std::string> skipped_reason;
  std::optional<std::string> corollary_skipped_reason;
  /// Internal failure while evaluating; counts as a failed instance.
  std::optional<std::string> error;

  /// Some evaluated claim is false.
  bool failed() const;
  /// No claim was evaluated.
  bool skipped() const { return skipped_reason.has_value(); }

  friend bool operator==(const InstanceReport&, const InstanceReport&) = default;
};

nlohmann::json to_json(const InstanceReport& r);
InstanceReport report_from_json(const nlohmann::json& j);

/// Recomputes the numeric claims (theorem, corollary, kernel lemma length
/// bound) from the report's own numbers and compares with the stored flags.
bool recheck(const InstanceReport& r);

struct VerifyOptions {
  bool corollary = false;
  bool chain = false;
  /// Run the exhaustive Hall search when the heuristic phases fail.
  bool exhaustive = true;
};

/// Throws PreconditionError unless p is an odd prime and pi contains 2 and p.
void require_theorem_hypotheses(const PrimeSet& pi, std::uint64_t p);

/// lambda_p(G) <= h*(H) for a Hall pi-subgroup H. Skipped (never passed)
/// when no Hall subgroup is found; CapExceeded also becomes a skip.
InstanceReport verify_theorem(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                              const std::string& name = "");
InstanceReport verify_corollary(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                                const std::string& name = "");
InstanceReport verify_proposition_chain(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                                        const std::string& name = "");
InstanceReport verify_instance(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                               const VerifyOptions& opts, const std::string& name = "");

struct SuiteInstance {
  std::string group;
  PrimeSet pi;
  std::uint64_t p;
};

/// Named groups of the standard corpus.
const std::vector<std::string>& standard_corpus();

/// Every valid (pi, p) for G: p an odd prime dividing |G|, pi = {2, p} plus
/// any subset of the remaining odd primes dividing |G|.
std::vector<std::pair<PrimeSet, std::uint64_t>> valid_parameters(std::uint64_t order);

/// Instances over the corpus groups of order at most max_order.
std::vector<SuiteInstance> suite_instances(const std::vector<std::string>& groups,
                                           std::uint64_t max_order);

/// Runs every instance with all claims enabled, in parallel. Reports come
/// back sorted by group name, then pi, then p.
std::vector<InstanceReport> run_suite(const std::vector<SuiteInstance>& instances,
                                      unsigned threads = 0);

}  // namespace hallbound
