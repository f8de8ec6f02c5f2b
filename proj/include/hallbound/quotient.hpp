#pragma once

#include <unordered_map>
#include <vector>

#include "hallbound/perm_group.hpp"

namespace hallbound {

/// Epimorphism G -> G/N realized by the action of G on right cosets Ng.
///
/// Coset i is represented by the lexicographically least element of the
/// coset (by image array); coset 0 is N itself. When N is trivial the map is
/// the identity on G and no cosets are listed.
class QuotientMap {
 public:
  /// Throws PreconditionError if N is not normal in G, CapExceeded if the
  /// index exceeds the quotient degree cap.
  QuotientMap(PermGroup source, PermGroup kernel);

  const PermGroup& source() const { return source_; }
  const PermGroup& kernel() const { return kernel_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Permutation>& coset_reps() const { return reps_; }
  bool is_identity_map() const { return identity_; }
  std::uint64_t index() const;

  /// Least element of the coset N*g.
  Permutation canonical_rep(const Permutation& g) const;

  Permutation image(const Permutation& g) const;
  /// Element of the source mapping to t. Throws unless t lies in the target.
  Permutation lift(const Permutation& t) const;

  PermGroup image(const PermGroup& S) const;
  PermGroup preimage(const PermGroup& T) const;

 private:
  std::uint32_t coset_index(const Permutation& g) const;

  PermGroup source_;
  PermGroup kernel_;
  PermGroup target_;
  bool identity_ = false;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> rep_index_;
};

QuotientMap quotient_by(const PermGroup& G, const PermGroup& N);
PermGroup image_subgroup(const QuotientMap& q, const PermGroup& S);
PermGroup preimage_subgroup(const QuotientMap& q, const PermGroup& T);

}  // namespace hallbound
