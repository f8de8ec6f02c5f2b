#pragma once

#include <vector>

#include "hallbound/perm_group.hpp"

namespace hallbound {

/// S <= G as sets (generator membership).
bool is_subgroup(const PermGroup& S, const PermGroup& G);

/// Every generator of G conjugates every generator of N into N.
/// Throws PreconditionError unless N <= G.
bool is_normal(const PermGroup& N, const PermGroup& G);

bool is_abelian(const PermGroup& G);

PermGroup cyclic_subgroup(const Permutation& x);

/// <A, B>
PermGroup join(const PermGroup& A, const PermGroup& B);

/// g^-1 S g
PermGroup conjugate_group(const PermGroup& S, const Permutation& g);

/// Smallest normal subgroup of G containing S. Throws unless S <= G.
PermGroup normal_closure(const PermGroup& G, const PermGroup& S);
PermGroup normal_closure(const PermGroup& G, const Permutation& x);

/// [A, B]: normal closure in <A, B> of the generator commutators.
/// Throws PreconditionError unless A, B <= ambient.
PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B, const PermGroup& ambient);

PermGroup derived_subgroup(const PermGroup& G);

/// G = G^(0) > G^(1) > ... down to the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& G);

/// Last term of the derived series.
PermGroup perfect_core(const PermGroup& G);

/// {g in G : g commutes with each generator of S}, by element filtering.
PermGroup centralizer(const PermGroup& G, const PermGroup& S);

PermGroup center(const PermGroup& G);

/// Enumerates the smaller group and filters by membership in the other.
PermGroup intersection(const PermGroup& A, const PermGroup& B);

/// {g in G : S^g = S}, by element filtering.
PermGroup normalizer(const PermGroup& G, const PermGroup& S);

/// Subgroup of G generated by the elements passing the filter.
template <typename Pred>
PermGroup filter_subgroup(const PermGroup& G, Pred&& keep) {
  SubgroupBuilder builder(G.degree());
  G.for_each_element([&](const Permutation& g) {
    if (!builder.contains(g) && keep(g))
      builder.add(g);
  });
  return builder.build();
}

}  // namespace hallbound
