#include "hallbound/group_ops.hpp"

#include "hallbound/config.hpp"

namespace hallbound {

bool is_subgroup(const PermGroup& S, const PermGroup& G) { return G.contains(S); }

bool is_normal(const PermGroup& N, const PermGroup& G) {
  if (!G.contains(N))
    throw PreconditionError("is_normal: N is not a subgroup of G");
  for (const auto& g : G.generators())
    for (const auto& n : N.generators())
      if (!N.contains(conjugate(n, g)))
        return false;
  return true;
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

PermGroup cyclic_subgroup(const Permutation& x) { return PermGroup(x.degree(), {x}); }

PermGroup join(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree())
    throw PreconditionError("join: degree mismatch");
  SubgroupBuilder builder(A);
  for (const auto& g : B.generators())
    builder.add(g);
  return builder.build();
}

PermGroup conjugate_group(const PermGroup& S, const Permutation& g) {
  std::vector<Permutation> gens;
  for (const auto& s : S.generators())
    gens.push_back(conjugate(s, g));
  return PermGroup(S.degree(), std::move(gens));
}

namespace {

PermGroup close_under_conjugation(const PermGroup& G, std::vector<Permutation> seeds) {
  SubgroupBuilder builder(G.degree());
  std::vector<Permutation> queue;
  for (auto& s : seeds)
    if (builder.add(s))
      queue.push_back(std::move(s));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : G.generators()) {
      Permutation c = conjugate(queue[head], g);
      if (builder.add(c))
        queue.push_back(std::move(c));
    }
  }
  return builder.build();
}

}  // namespace

PermGroup normal_closure(const PermGroup& G, const PermGroup& S) {
  if (!G.contains(S))
    throw PreconditionError("normal_closure: S is not a subgroup of G");
  return close_under_conjugation(G, S.generators());
}

PermGroup normal_closure(const PermGroup& G, const Permutation& x) {
  if (!G.contains(x))
    throw PreconditionError("normal_closure: element not in G");
  return close_under_conjugation(G, {x});
}

PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B, const PermGroup& ambient) {
  if (!ambient.contains(A) || !ambient.contains(B))
    throw PreconditionError("commutator_subgroup: arguments not inside ambient group");
  std::vector<Permutation> comms;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators())
      comms.push_back(commutator(a, b));
  return close_under_conjugation(join(A, B), std::move(comms));
}

PermGroup derived_subgroup(const PermGroup& G) { return commutator_subgroup(G, G, G); }

std::vector<PermGroup> derived_series(const PermGroup& G) {
  std::vector<PermGroup> series{G};
  for (;;) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

PermGroup perfect_core(const PermGroup& G) { return derived_series(G).back(); }

PermGroup centralizer(const PermGroup& G, const PermGroup& S) {
  if (S.degree() != G.degree())
    throw PreconditionError("centralizer: degree mismatch");
  const auto& sgens = S.generators();
  return filter_subgroup(G, [&](const Permutation& g) {
    for (const auto& s : sgens)
      if (g * s != s * g)
        return false;
    return true;
  });
}

PermGroup center(const PermGroup& G) { return centralizer(G, G); }

PermGroup intersection(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree())
    throw PreconditionError("intersection: degree mismatch");
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  if (large.contains(small))
    return small;
  return filter_subgroup(small, [&](const Permutation& g) { return large.contains(g); });
}

PermGroup normalizer(const PermGroup& G, const PermGroup& S) {
  if (S.degree() != G.degree())
    throw PreconditionError("normalizer: degree mismatch");
  return filter_subgroup(G, [&](const Permutation& g) {
    for (const auto& s : S.generators())
      if (!S.contains(conjugate(s, g)))
        return false;
    return true;
  });
}

}  // namespace hallbound
