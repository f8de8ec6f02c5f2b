#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "hallbound/permutation.hpp"

namespace hallbound {

/// Stabilizer chain over the complete base 0, 1, ..., n-1.
///
/// Level l holds the strong generators fixing points 0..l-1 and the orbit of
/// point l under them. Levels whose orbit is {l} cost no storage beyond an
/// empty record. Using every point as a base point, in order, makes
/// lexicographically minimal coset representatives a greedy walk down the
/// chain (see QuotientMap).
class StabChain {
 public:
  explicit StabChain(std::size_t degree);

  std::size_t degree() const { return degree_; }

  /// Adds g to the generating set. Returns false if g was already a member.
  bool add_generator(const Permutation& g);

  bool contains(const Permutation& g) const;

  /// Sifts g through levels [from, n). Returns the residue and the level at
  /// which sifting stopped (degree() if the residue is the identity).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;

  /// Product of fundamental orbit lengths. Throws EngineError on overflow.
  std::uint64_t order() const;

  const std::vector<Point>& orbit(std::size_t level) const;
  bool orbit_contains(std::size_t level, Point x) const;
  /// Element u of level's group with u(level) == x.
  Permutation transversal(std::size_t level, Point x) const;
  const std::vector<Permutation>& generators(std::size_t level) const;
  /// Levels with orbit length > 1, ascending.
  std::vector<std::size_t> nontrivial_levels() const;
  /// Union of the level generator lists without duplicates.
  std::vector<Permutation> strong_generators() const;

 private:
  struct Level {
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    std::vector<Point> orbit;
    // Point -> Schreier label: -1 outside orbit, -2 root, k = reached via gens[k].
    std::vector<std::int32_t> label;
    // Explicit transversal (and inverses) indexed like orbit, when small enough.
    std::vector<Permutation> u;
    std::vector<Permutation> u_inv;
    std::vector<std::int32_t> pos;
  };

  void rebuild_orbit(std::size_t level);
  void push_generator(std::size_t level, const Permutation& g);
  void complete_from(std::size_t level);
  Permutation transversal_inverse(std::size_t level, Point x) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Immutable handle on the subgroup of Sym(degree) generated by a list.
///
/// The stabilizer chain is built on first use and shared between copies;
/// building is guarded so concurrent readers are safe.
class PermGroup {
 public:
  PermGroup() : PermGroup(1) {}
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});
  PermGroup(std::size_t degree, std::vector<Permutation> generators, StabChain chain);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  std::size_t degree() const { return state_->degree; }
  const std::vector<Permutation>& generators() const { return state_->generators; }
  const StabChain& chain() const;

  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }

  /// Throws PreconditionError on degree mismatch.
  bool contains(const Permutation& x) const;
  /// True when every generator of other lies in this group.
  bool contains(const PermGroup& other) const;

  std::vector<Point> orbit(Point point) const;

  /// Visits every element. Throws CapExceeded above the enumeration cap.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> elements() const;

  /// Uniform random element via random transversal products.
  Permutation random_element(std::mt19937_64& rng) const;

  Permutation identity() const { return Permutation::identity(degree()); }

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct State {
    std::size_t degree;
    std::vector<Permutation> generators;
    mutable std::once_flag built;
    mutable std::unique_ptr<StabChain> chain;
  };
  std::shared_ptr<State> state_;
};

/// Validates degrees and builds the handle.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens);

/// Accumulates generators while keeping a live stabilizer chain, so each
/// candidate can be tested for membership before it is kept.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(std::size_t degree) : degree_(degree), chain_(degree) {}
  explicit SubgroupBuilder(const PermGroup& start);

  /// Returns true if x enlarged the group.
  bool add(const Permutation& x);
  bool contains(const Permutation& x) const { return chain_.contains(x); }
  std::uint64_t order() const { return chain_.order(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  PermGroup build() const { return PermGroup(degree_, gens_, chain_); }

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  StabChain chain_;
};

}  // namespace hallbound
