#include "hallbound/hall.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "hallbound/config.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/quotient.hpp"
#include "hallbound/structure.hpp"

namespace hallbound {

std::string to_string(HallStatus status) {
  switch (status) {
    case HallStatus::found:
      return "found";
    case HallStatus::proven_absent:
      return "proven_absent";
    case HallStatus::unknown:
      return "unknown";
  }
  return "?";
}

namespace {

// pi-part of x: the power of x whose order is the pi-part of ord(x).
Permutation pi_part(const Permutation& x, const PrimeSet& pi) {
  const auto o = x.order();
  return x.pow(o / pi.part_of(o));
}

bool fits(const PermGroup& K, const PrimeSet& pi, std::uint64_t target) {
  return pi.is_pi_number(K.order()) && target % K.order() == 0;
}

PermGroup adjoin(const PermGroup& H, const Permutation& x) {
  SubgroupBuilder b(H);
  b.add(x);
  return b.build();
}

HallSearchResult found(PermGroup H, HallSearchBudget budget) {
  HallSearchResult r;
  r.status = HallStatus::found;
  r.witness = std::move(H);
  r.budget = budget;
  return r;
}

}  // namespace

bool is_hall_subgroup(const PermGroup& G, const PermGroup& H, const PrimeSet& pi) {
  if (!G.contains(H))
    throw PreconditionError("is_hall_subgroup: H is not a subgroup of G");
  return pi.is_pi_number(H.order()) && pi.is_pi_prime_number(G.order() / H.order());
}

std::vector<PermGroup> pi_subgroup_classes(const PermGroup& G, const PrimeSet& pi) {
  if (G.order() > limits().exhaustive_hall_cap)
    throw CapExceeded("pi_subgroup_classes: group order " + std::to_string(G.order()) +
                      " exceeds the exhaustive search cap " +
                      std::to_string(limits().exhaustive_hall_cap));
  const auto target = pi.part_of(G.order());
  const auto elements = G.elements();
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], i);
  std::vector<std::uint32_t> pi_elements;
  for (std::uint32_t i = 0; i < elements.size(); ++i)
    if (!elements[i].is_identity() && pi.is_pi_number(elements[i].order()))
      pi_elements.push_back(i);

  using Key = std::vector<std::uint32_t>;
  auto key_of = [&](const PermGroup& K) {
    Key k;
    K.for_each_element([&](const Permutation& x) { k.push_back(index.at(x)); });
    std::sort(k.begin(), k.end());
    return k;
  };
  std::set<Key> seen;
  std::vector<PermGroup> reps;
  // Records K and marks its whole conjugacy class as seen.
  auto visit = [&](const PermGroup& K) {
    auto k = key_of(K);
    if (seen.count(k))
      return;
    reps.push_back(K);
    std::vector<Key> queue{k};
    seen.insert(std::move(k));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& g : G.generators()) {
        Key c;
        c.reserve(queue[head].size());
        for (auto i : queue[head])
          c.push_back(index.at(conjugate(elements[i], g)));
        std::sort(c.begin(), c.end());
        if (seen.insert(c).second)
          queue.push_back(std::move(c));
      }
  };

  visit(PermGroup::trivial(G.degree()));
  for (auto i : pi_elements)
    visit(cyclic_subgroup(elements[i]));
  // Every pi-subgroup is reached by adjoining one element at a time; joining
  // conjugates of reps with conjugate elements gives conjugate results, so
  // keeping one rep per class loses nothing.
  for (std::size_t head = 1; head < reps.size(); ++head) {
    const PermGroup H = reps[head];
    if (H.order() == target)
      continue;
    for (auto i : pi_elements) {
      if (H.contains(elements[i]))
        continue;
      auto K = adjoin(H, elements[i]);
      if (fits(K, pi, target))
        visit(K);
    }
  }
  return reps;
}

HallSearchResult find_hall_subgroup(const PermGroup& G, const PrimeSet& pi, bool exhaustive) {
  HallSearchBudget budget;
  const auto target = pi.part_of(G.order());
  if (target == 1)
    return found(PermGroup::trivial(G.degree()), budget);
  if (target == G.order())
    return found(G, budget);

  // Random growth with restarts.
  std::mt19937_64 rng(limits().seed ^ (G.order() * 0x9e3779b97f4a7c15ULL) ^
                      std::hash<std::string>{}(pi.to_string()));
  for (int restart = 0; restart < 40; ++restart) {
    PermGroup H = PermGroup::trivial(G.degree());
    for (int misses = 0; misses < 40;) {
      ++budget.random_attempts;
      auto x = pi_part(G.random_element(rng), pi);
      if (x.is_identity() || H.contains(x)) {
        ++misses;
        continue;
      }
      auto K = adjoin(H, x);
      if (!fits(K, pi, target)) {
        ++misses;
        continue;
      }
      H = std::move(K);
      if (H.order() == target)
        return found(H, budget);
    }
  }

  // In a soluble group every pi-subgroup lies in a Hall pi-subgroup, so
  // greedy growth over all pi-elements cannot get stuck.
  if (G.order() <= limits().enumeration_cap && is_soluble(G)) {
    PermGroup H = PermGroup::trivial(G.degree());
    for (bool grew = true; grew && H.order() < target;) {
      grew = false;
      ++budget.greedy_passes;
      G.for_each_element([&](const Permutation& x) {
        if (H.order() == target || H.contains(x) || !pi.is_pi_number(x.order()))
          return;
        auto K = adjoin(H, x);
        if (fits(K, pi, target)) {
          H = std::move(K);
          grew = true;
        }
      });
    }
    if (H.order() == target)
      return found(H, budget);
    throw EngineError("find_hall_subgroup: greedy search stalled in a soluble group");
  }

  HallSearchResult r;
  r.budget = budget;
  if (!exhaustive) {
    r.note = "heuristic search exhausted its budget";
    return r;
  }
  if (G.order() > limits().exhaustive_hall_cap) {
    r.note = "group order " + std::to_string(G.order()) + " exceeds the exhaustive search cap";
    return r;
  }
  const auto classes = pi_subgroup_classes(G, pi);
  r.budget.subgroups_examined = classes.size();
  for (const auto& K : classes)
    if (K.order() == target)
      return found(K, r.budget);
  r.status = HallStatus::proven_absent;
  return r;
}

bool check_hall_heredity(const PermGroup& G, const PermGroup& H, const PrimeSet& pi,
                         const PermGroup& N) {
  if (!is_hall_subgroup(G, H, pi))
    throw PreconditionError("check_hall_heredity: H is not a Hall subgroup of G");
  if (!G.contains(N) || !is_normal(N, G))
    throw PreconditionError("check_hall_heredity: N is not normal in G");
  if (!is_hall_subgroup(N, intersection(H, N), pi))
    return false;
  auto q = quotient_by(G, N);
  return is_hall_subgroup(q.target(), q.image(H), pi);
}

bool confirm_no_nilpotent_hall_2p(const PermGroup& S, std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw PreconditionError("confirm_no_nilpotent_hall_2p: p must be an odd prime");
  if (S.order() % p != 0)
    throw PreconditionError("confirm_no_nilpotent_hall_2p: p does not divide |S|");
  if (!is_simple(S))
    throw PreconditionError("confirm_no_nilpotent_hall_2p: group is not simple");
  const PrimeSet pi{2, p};
  const auto target = pi.part_of(S.order());
  for (const auto& K : pi_subgroup_classes(S, pi))
    if (K.order() == target && is_nilpotent(K))
      return false;
  return true;
}

}  // namespace hallbound
