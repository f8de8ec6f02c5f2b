#include "hallbound/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hallbound/config.hpp"
#include "hallbound/corpus.hpp"
#include "hallbound/length.hpp"
#include "hallbound/radicals.hpp"
#include "hallbound/structure.hpp"

namespace hallbound {

using nlohmann::json;

bool InstanceReport::failed() const {
  if (error)
    return true;
  for (const auto& c : {checks.theorem, checks.corollary, checks.proposition, checks.lemma_F,
                        checks.kernel_lemma})
    if (c && !*c)
      return true;
  return false;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

HallStatus parse_status(const std::string& s) {
  for (auto st : {HallStatus::found, HallStatus::proven_absent, HallStatus::unknown})
    if (to_string(st) == s)
      return st;
  throw PreconditionError("unknown hall status '" + s + "'");
}

std::vector<std::uint64_t> orders_of(const std::vector<PermGroup>& gs) {
  std::vector<std::uint64_t> out;
  for (const auto& g : gs)
    out.push_back(g.order());
  return out;
}

bool corollary_numbers_hold(const InstanceReport& r) {
  return r.l2_H && r.fitting_height_T && r.l2_T && r.lambda_p <= 2 * *r.l2_H + 1 &&
         *r.fitting_height_T <= 2 * *r.l2_T + 1 && *r.l2_T <= *r.l2_H;
}

}  // namespace

json to_json(const InstanceReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["group"] = {{"name", r.group_name}, {"order", r.order}, {"degree", r.degree}};
  j["p"] = r.p;
  j["pi"] = r.pi.primes();
  j["lambda_p"] = r.lambda_p;
  j["kernel_orders"] = r.kernel_orders;
  j["hall"] = {{"status", to_string(r.hall_status)}, {"order", opt(r.hall_order)}};
  j["h_star_H"] = opt(r.h_star_H);
  j["h_star_series"] = r.h_star_series;
  j["l2_H"] = opt(r.l2_H);
  j["corollary_route"] = {{"t_order", opt(r.t_order)},
                          {"fitting_height_T", opt(r.fitting_height_T)},
                          {"l2_T", opt(r.l2_T)}};
  j["kernel_lambda"] = opt(r.kernel_lambda);
  j["checks"] = {{"theorem", opt(r.checks.theorem)},
                 {"corollary", opt(r.checks.corollary)},
                 {"proposition", opt(r.checks.proposition)},
                 {"lemma_F", opt(r.checks.lemma_F)},
                 {"kernel_lemma", opt(r.checks.kernel_lemma)}};
  if (r.skipped_reason)
    j["skipped_reason"] = *r.skipped_reason;
  if (r.corollary_skipped_reason)
    j["corollary_skipped_reason"] = *r.corollary_skipped_reason;
  if (r.error)
    j["error"] = *r.error;
  return j;
}

InstanceReport report_from_json(const json& j) {
  if (j.value("schema", 0) != kReportSchema)
    throw PreconditionError("report_from_json: unsupported schema");
  InstanceReport r;
  const auto& g = j.at("group");
  r.group_name = g.at("name").get<std::string>();
  r.order = g.at("order").get<std::uint64_t>();
  r.degree = g.at("degree").get<std::size_t>();
  r.p = j.at("p").get<std::uint64_t>();
  r.pi = PrimeSet(j.at("pi").get<std::vector<std::uint64_t>>());
  r.lambda_p = j.at("lambda_p").get<unsigned>();
  r.kernel_orders = j.at("kernel_orders").get<std::vector<std::uint64_t>>();
  r.hall_status = parse_status(j.at("hall").at("status").get<std::string>());
  r.hall_order = get_opt<std::uint64_t>(j.at("hall"), "order");
  r.h_star_H = get_opt<unsigned>(j, "h_star_H");
  r.h_star_series = j.at("h_star_series").get<std::vector<std::uint64_t>>();
  r.l2_H = get_opt<unsigned>(j, "l2_H");
  const auto& route = j.at("corollary_route");
  r.t_order = get_opt<std::uint64_t>(route, "t_order");
  r.fitting_height_T = get_opt<unsigned>(route, "fitting_height_T");
  r.l2_T = get_opt<unsigned>(route, "l2_T");
  r.kernel_lambda = get_opt<unsigned>(j, "kernel_lambda");
  const auto& c = j.at("checks");
  r.checks.theorem = get_opt<bool>(c, "theorem");
  r.checks.corollary = get_opt<bool>(c, "corollary");
  r.checks.proposition = get_opt<bool>(c, "proposition");
  r.checks.lemma_F = get_opt<bool>(c, "lemma_F");
  r.checks.kernel_lemma = get_opt<bool>(c, "kernel_lemma");
  r.skipped_reason = get_opt<std::string>(j, "skipped_reason");
  r.corollary_skipped_reason = get_opt<std::string>(j, "corollary_skipped_reason");
  r.error = get_opt<std::string>(j, "error");
  return r;
}

bool recheck(const InstanceReport& r) {
  if (r.lambda_p != r.kernel_orders.size())
    return false;
  if (r.checks.theorem && *r.checks.theorem != (r.h_star_H && r.lambda_p <= *r.h_star_H))
    return false;
  if (r.h_star_H && r.h_star_series.size() != *r.h_star_H + 1)
    return false;
  if (r.checks.corollary && *r.checks.corollary != corollary_numbers_hold(r))
    return false;
  if (r.checks.kernel_lemma && *r.checks.kernel_lemma && (!r.kernel_lambda || *r.kernel_lambda > 1))
    return false;
  return true;
}

void require_theorem_hypotheses(const PrimeSet& pi, std::uint64_t p) {
  if (!pi.contains(2))
    throw PreconditionError("π must contain 2");
  if (p == 2 || !is_prime(p))
    throw PreconditionError("p must be an odd prime");
  if (!pi.contains(p))
    throw PreconditionError("π must contain p");
}

InstanceReport verify_instance(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                               const VerifyOptions& opts, const std::string& name) {
  require_theorem_hypotheses(pi, p);
  InstanceReport r;
  r.group_name = name.empty() ? "G" : name;
  r.order = G.order();
  r.degree = G.degree();
  r.p = p;
  r.pi = pi;
  try {
    const auto ks = kernel_series(G, p);
    r.lambda_p = ks.lambda;
    r.kernel_orders = orders_of(ks.kernels);

    const auto hall = find_hall_subgroup(G, pi, opts.exhaustive);
    r.hall_status = hall.status;
    if (hall.status != HallStatus::found) {
      r.skipped_reason = hall.status == HallStatus::proven_absent
                             ? "no Hall " + pi.to_string() + "-subgroup exists"
                             : "Hall " + pi.to_string() + "-subgroup search inconclusive: " + hall.note;
      return r;
    }
    const PermGroup H = *hall.witness;
    r.hall_order = H.order();

    const auto hs = generalized_fitting_height(H);
    r.h_star_H = hs.height;
    r.h_star_series = orders_of(hs.series);
    r.checks.theorem = r.lambda_p <= hs.height;

    if (opts.corollary) {
      if (!is_soluble(H)) {
        r.corollary_skipped_reason = "Hall subgroup is not soluble";
      } else {
        r.l2_H = two_length(H).height;
        const auto t = find_hall_subgroup(H, PrimeSet{2, p}, false);
        if (t.status != HallStatus::found)
          throw EngineError("verify_corollary: soluble H has no Hall {2,p}-subgroup");
        const auto& T = *t.witness;
        r.t_order = T.order();
        r.fitting_height_T = fitting_height(T).height;
        r.l2_T = two_length(T).height;
        r.checks.corollary = corollary_numbers_hold(r);
      }
    }

    if (opts.chain) {
      const PermGroup K = ks.kernels.empty() ? G : ks.kernels.front();
      r.checks.lemma_F = K.contains(fitting_subgroup(H));
      r.checks.proposition = K.contains(generalized_fitting(H));
      r.kernel_lambda = kernel_series(K, p).lambda;
      r.checks.kernel_lemma = check_kernel_lemma(G, p);
    }
  } catch (const CapExceeded& e) {
    r.checks = {};
    r.skipped_reason = std::string("size limit: ") + e.what();
  }
  return r;
}

InstanceReport verify_theorem(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                              const std::string& name) {
  return verify_instance(G, pi, p, {}, name);
}

InstanceReport verify_corollary(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                                const std::string& name) {
  return verify_instance(G, pi, p, {.corollary = true}, name);
}

InstanceReport verify_proposition_chain(const PermGroup& G, const PrimeSet& pi, std::uint64_t p,
                                        const std::string& name) {
  return verify_instance(G, pi, p, {.chain = true}, name);
}

const std::vector<std::string>& standard_corpus() {
  static const std::vector<std::string> corpus = {
      // soluble
      "C6", "C12", "C15", "D8", "D10", "D12", "S3", "S4", "A4", "SL(2,3)", "S3 x S3", "C2 wr S3",
      "S4 x C3", "C3 wr C2", "A4 x C2", "S4 x S3", "C3 wr S3", "PSL(2,3)",
      // insoluble
      "A5", "S5", "A6", "S6", "A7", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)", "SL(2,5)",
      "A5 x C2", "A5 x C3", "PSL(2,7) x C2", "A5 wr C2", "A5 x A5", "A5 wr A5"};
  return corpus;
}

std::vector<std::pair<PrimeSet, std::uint64_t>> valid_parameters(std::uint64_t order) {
  std::vector<std::uint64_t> odd;
  for (auto q : prime_divisors(order))
    if (q != 2)
      odd.push_back(q);
  std::vector<std::pair<PrimeSet, std::uint64_t>> out;
  for (auto p : odd) {
    std::vector<std::uint64_t> rest;
    for (auto q : odd)
      if (q != p)
        rest.push_back(q);
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
      std::vector<std::uint64_t> primes{2, p};
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (mask & (1u << i))
          primes.push_back(rest[i]);
      out.emplace_back(PrimeSet(primes), p);
    }
  }
  return out;
}

std::vector<SuiteInstance> suite_instances(const std::vector<std::string>& groups,
                                           std::uint64_t max_order) {
  std::vector<SuiteInstance> out;
  for (const auto& name : groups) {
    const auto order = closed_form_order(parse_group_spec(name));
    if (order > max_order)
      continue;
    for (const auto& [pi, p] : valid_parameters(order))
      out.push_back({name, pi, p});
  }
  return out;
}

std::vector<InstanceReport> run_suite(const std::vector<SuiteInstance>& instances,
                                      unsigned threads) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, instances.size()));
  std::vector<InstanceReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      const auto& inst = instances[i];
      try {
        const auto G = make_named(inst.group);
        const auto exhaustive = G.order() <= limits().exhaustive_hall_cap;
        reports[i] = verify_instance(G, inst.pi, inst.p,
                                     {.corollary = true, .chain = true, .exhaustive = exhaustive},
                                     inst.group);
      } catch (const std::exception& e) {
        InstanceReport r;
        r.group_name = inst.group;
        r.p = inst.p;
        r.pi = inst.pi;
        r.error = e.what();
        reports[i] = std::move(r);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(work);
  for (auto& t : pool)
    t.join();
  std::sort(reports.begin(), reports.end(), [](const InstanceReport& a, const InstanceReport& b) {
    return std::tie(a.group_name, a.pi, a.p) < std::tie(b.group_name, b.pi, b.p);
  });
  return reports;
}

}  // namespace hallbound
