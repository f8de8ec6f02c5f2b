#include "hallbound/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/hall.hpp"
#include "hallbound/length.hpp"
#include "hallbound/radicals.hpp"
#include "hallbound/structure.hpp"
#include "hallbound/verify.hpp"

namespace hallbound {

using nlohmann::json;

namespace {

enum Exit { kHolds = 0, kFailed = 1, kError = 2, kSkipped = 3 };

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + std::to_string(xs[i]);
  return s;
}

std::string verdict(const std::optional<bool>& c) {
  return !c ? "not evaluated" : *c ? "holds" : "FAILS";
}

int exit_for(const std::vector<InstanceReport>& reports) {
  bool any_verified = false;
  for (const auto& r : reports) {
    if (r.failed())
      return kFailed;
    any_verified = any_verified || !r.skipped();
  }
  return any_verified ? kHolds : kSkipped;
}

void print_report(std::ostream& out, const InstanceReport& r) {
  out << r.group_name << "  |G| = " << r.order << "  pi = " << r.pi.to_string() << "  p = " << r.p
      << "\n";
  out << "  lambda_" << r.p << "(G) = " << r.lambda_p;
  if (!r.kernel_orders.empty())
    out << "  kernel orders [" << join(r.kernel_orders) << "]";
  out << "\n  Hall subgroup: " << to_string(r.hall_status);
  if (r.hall_order)
    out << ", order " << *r.hall_order;
  out << "\n";
  if (r.error) {
    out << "  ERROR: " << *r.error << "\n";
    return;
  }
  if (r.skipped_reason) {
    out << "  skipped: " << *r.skipped_reason << "\n";
    return;
  }
  if (r.h_star_H)
    out << "  theorem: " << r.lambda_p << " <= h*(H) = " << *r.h_star_H << "  "
        << verdict(r.checks.theorem) << "  (F* series orders [" << join(r.h_star_series) << "])\n";
  if (r.checks.corollary)
    out << "  corollary: " << r.lambda_p << " <= 2*l2(H)+1 = " << 2 * *r.l2_H + 1 << "; |T| = "
        << *r.t_order << ", h(T) = " << *r.fitting_height_T << " <= 2*l2(T)+1 = "
        << 2 * *r.l2_T + 1 << ", l2(T) = " << *r.l2_T << " <= l2(H) = " << *r.l2_H << "  "
        << verdict(r.checks.corollary) << "\n";
  if (r.corollary_skipped_reason)
    out << "  corollary skipped: " << *r.corollary_skipped_reason << "\n";
  if (r.checks.lemma_F)
    out << "  F(H) <= K_p(G): " << verdict(r.checks.lemma_F) << "\n";
  if (r.checks.proposition)
    out << "  F*(H) <= K_p(G): " << verdict(r.checks.proposition) << "\n";
  if (r.checks.kernel_lemma)
    out << "  kernel lemma (lambda_p(K_p(G)) = " << r.kernel_lambda.value_or(0)
        << "): " << verdict(r.checks.kernel_lemma) << "\n";
}

json invariants_json(const PermGroup& G, const std::string& name,
                     const std::vector<std::uint64_t>& primes) {
  json j;
  j["schema"] = kReportSchema;
  j["group"] = {{"name", name}, {"order", G.order()}, {"degree", G.degree()}};
  const bool soluble = is_soluble(G);
  j["soluble"] = soluble;
  j["fitting_order"] = fitting_subgroup(G).order();
  j["layer_order"] = layer(G).order();
  j["generalized_fitting_order"] = generalized_fitting(G).order();
  const auto hs = generalized_fitting_height(G);
  j["h_star"] = hs.height;
  std::vector<std::uint64_t> series;
  for (const auto& S : hs.series)
    series.push_back(S.order());
  j["h_star_series"] = series;
  j["fitting_height"] = soluble ? json(fitting_height(G).height) : json(nullptr);
  j["l2"] = soluble ? json(two_length(G).height) : json(nullptr);
  json per_p = json::array();
  for (auto p : primes) {
    const auto ks = kernel_series(G, p);
    std::vector<std::uint64_t> orders;
    for (const auto& K : ks.kernels)
      orders.push_back(K.order());
    per_p.push_back({{"p", p},
                     {"lambda_p", ks.lambda},
                     {"kernel_orders", orders},
                     {"p_soluble", ks.lambda == 0},
                     {"p_soluble_radical_order", p_soluble_radical(G, p).order()}});
  }
  j["primes"] = per_p;
  return j;
}

void print_invariants(std::ostream& out, const json& j) {
  out << j["group"]["name"].get<std::string>() << "  order " << j["group"]["order"]
      << "  degree " << j["group"]["degree"] << "\n";
  out << "  soluble: " << (j["soluble"].get<bool>() ? "yes" : "no") << "\n";
  out << "  |F| = " << j["fitting_order"] << "  |E| = " << j["layer_order"]
      << "  |F*| = " << j["generalized_fitting_order"] << "\n";
  out << "  h* = " << j["h_star"] << "  series " << j["h_star_series"].dump() << "\n";
  if (!j["fitting_height"].is_null())
    out << "  fitting height = " << j["fitting_height"] << "  l2 = " << j["l2"] << "\n";
  for (const auto& e : j["primes"])
    out << "  p = " << e["p"] << ": lambda_p = " << e["lambda_p"] << "  kernels "
        << e["kernel_orders"].dump() << "  |R_p| = " << e["p_soluble_radical_order"] << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-p-soluble length and Hall subgroup bounds for permutation groups",
               "hallbound"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string spec;
  std::uint64_t p = 0;
  std::string pi_text;
  bool exhaustive = false, corollary = false, chain = false;
  std::uint64_t scale = 0;
  unsigned threads = 0;

  auto* order_cmd = app.add_subcommand("order", "Print the group order");
  order_cmd->add_option("SPEC", spec, "group name or file")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Structural invariants of a group");
  inv_cmd->add_option("SPEC", spec, "group name or file")->required();
  inv_cmd->add_option("--p", p, "prime (default: every prime dividing |G|)");

  auto* hall_cmd = app.add_subcommand("hall", "Search for a Hall pi-subgroup");
  hall_cmd->add_option("SPEC", spec, "group name or file")->required();
  hall_cmd->add_option("--pi", pi_text, "comma-separated primes")->required();
  hall_cmd->add_flag("--exhaustive", exhaustive, "search all pi-subgroups if heuristics fail");

  auto* verify_cmd = app.add_subcommand("verify", "Check the length bounds on one instance");
  verify_cmd->add_option("SPEC", spec, "group name or file")->required();
  verify_cmd->add_option("--pi", pi_text, "comma-separated primes, containing 2 and p")
      ->required();
  verify_cmd->add_option("--p", p, "odd prime in pi")->required();
  verify_cmd->add_flag("--corollary", corollary, "also check the 2-length bound");
  verify_cmd->add_flag("--chain", chain, "also check the kernel containments");

  auto* suite_cmd = app.add_subcommand("suite", "Run every check over the group corpus");
  suite_cmd->add_option("--scale", scale, "largest group order to include (default: all)");
  suite_cmd->add_option("--threads", threads, "worker threads (default: hardware)");

  for (auto* sub : {order_cmd, inv_cmd, hall_cmd, verify_cmd, suite_cmd})
    sub->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    load_limits_from_env();

    if (*order_cmd) {
      const auto G = load_group(spec);
      if (as_json)
        out << json{{"group", {{"name", spec}, {"order", G.order()}, {"degree", G.degree()}}}}.dump(2)
            << "\n";
      else
        out << G.order() << "\n";
      return kHolds;
    }

    if (*inv_cmd) {
      const auto G = load_group(spec);
      std::vector<std::uint64_t> primes;
      if (p != 0) {
        if (!is_prime(p))
          throw PreconditionError("--p must be a prime");
        primes.push_back(p);
      } else {
        primes = prime_divisors(G.order());
      }
      const auto j = invariants_json(G, spec, primes);
      if (as_json)
        out << j.dump(2) << "\n";
      else
        print_invariants(out, j);
      return kHolds;
    }

    if (*hall_cmd) {
      const auto G = load_group(spec);
      const auto pi = PrimeSet::parse(pi_text);
      const auto r = find_hall_subgroup(G, pi, exhaustive);
      if (as_json) {
        json j{{"schema", kReportSchema},
               {"group", {{"name", spec}, {"order", G.order()}, {"degree", G.degree()}}},
               {"pi", pi.primes()},
               {"status", to_string(r.status)},
               {"order", r.witness ? json(r.witness->order()) : json(nullptr)},
               {"budget",
                {{"random_attempts", r.budget.random_attempts},
                 {"greedy_passes", r.budget.greedy_passes},
                 {"subgroups_examined", r.budget.subgroups_examined}}}};
        if (!r.note.empty())
          j["note"] = r.note;
        out << j.dump(2) << "\n";
      } else {
        out << spec << "  pi = " << pi.to_string() << ": " << to_string(r.status);
        if (r.witness)
          out << ", order " << r.witness->order();
        if (!r.note.empty())
          out << " (" << r.note << ")";
        out << "\n";
      }
      return r.status == HallStatus::unknown ? kSkipped : kHolds;
    }

    if (*verify_cmd) {
      const auto pi = PrimeSet::parse(pi_text);
      require_theorem_hypotheses(pi, p);
      const auto G = load_group(spec);
      const auto r = verify_instance(G, pi, p, {.corollary = corollary, .chain = chain}, spec);
      if (as_json)
        out << to_json(r).dump(2) << "\n";
      else
        print_report(out, r);
      return exit_for({r});
    }

    if (*suite_cmd) {
      const auto instances = suite_instances(
          standard_corpus(), scale == 0 ? std::numeric_limits<std::uint64_t>::max() : scale);
      const auto reports = run_suite(instances, threads);
      std::size_t holds = 0, failed = 0, skipped = 0;
      for (const auto& r : reports) {
        if (r.failed())
          ++failed;
        else if (r.skipped())
          ++skipped;
        else
          ++holds;
      }
      if (as_json) {
        json list = json::array();
        for (const auto& r : reports)
          list.push_back(to_json(r));
        out << json{{"schema", kReportSchema},
                    {"summary", {{"instances", reports.size()},
                                 {"holds", holds},
                                 {"failed", failed},
                                 {"skipped", skipped}}},
                    {"reports", list}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& r : reports)
          print_report(out, r);
        out << reports.size() << " instances: " << holds << " hold, " << failed << " failed, "
            << skipped << " skipped\n";
      }
      return exit_for(reports);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace hallbound
