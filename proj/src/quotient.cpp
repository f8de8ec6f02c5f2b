#include "hallbound/quotient.hpp"

#include "hallbound/config.hpp"
#include "hallbound/group_ops.hpp"

namespace hallbound {

QuotientMap::QuotientMap(PermGroup source, PermGroup kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  if (!is_normal(kernel_, source_))
    throw PreconditionError("quotient_by: kernel is not normal in the source group");

  if (kernel_.is_trivial()) {
    identity_ = true;
    target_ = source_;
    return;
  }

  const std::uint64_t idx = source_.order() / kernel_.order();
  if (idx > limits().quotient_degree_cap)
    throw CapExceeded("quotient_by: index " + std::to_string(idx) +
                      " exceeds quotient degree cap " +
                      std::to_string(limits().quotient_degree_cap));

  reps_.push_back(source_.identity());
  rep_index_.emplace(reps_.back(), 0);
  std::vector<std::vector<Point>> images(source_.generators().size());
  for (std::size_t head = 0; head < reps_.size(); ++head) {
    for (std::size_t k = 0; k < source_.generators().size(); ++k) {
      Permutation next = canonical_rep(reps_[head] * source_.generators()[k]);
      auto [it, inserted] = rep_index_.emplace(next, static_cast<std::uint32_t>(reps_.size()));
      if (inserted)
        reps_.push_back(std::move(next));
      images[k].push_back(it->second);
    }
  }
  if (reps_.size() != idx)
    throw EngineError("quotient_by: coset count disagrees with index");

  std::vector<Permutation> gens;
  for (auto& img : images)
    gens.emplace_back(std::move(img));
  target_ = PermGroup(reps_.size(), std::move(gens));
  if (target_.order() != idx)
    throw EngineError("quotient_by: coset action is not faithful on G/N");
}

std::uint64_t QuotientMap::index() const {
  return identity_ ? source_.order() : reps_.size();
}

Permutation QuotientMap::canonical_rep(const Permutation& g) const {
  // Greedy walk down the kernel chain: at base point l choose the orbit
  // element y minimizing c(y), then continue inside the stabilizer.
  const StabChain& chain = kernel_.chain();
  Permutation c = g;
  for (std::size_t l : chain.nontrivial_levels()) {
    const auto& orb = chain.orbit(l);
    Point best = orb.front();
    for (Point y : orb)
      if (c(y) < c(best))
        best = y;
    if (best != l)
      c = chain.transversal(l, best) * c;
  }
  return c;
}

std::uint32_t QuotientMap::coset_index(const Permutation& g) const {
  auto it = rep_index_.find(canonical_rep(g));
  if (it == rep_index_.end())
    throw PreconditionError("element does not lie in the source group");
  return it->second;
}

Permutation QuotientMap::image(const Permutation& g) const {
  if (g.degree() != source_.degree())
    throw PreconditionError("image: degree mismatch");
  if (identity_) {
    if (!source_.contains(g))
      throw PreconditionError("image: element not in source group");
    return g;
  }
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    img[i] = coset_index(reps_[i] * g);
  return Permutation(std::move(img));
}

Permutation QuotientMap::lift(const Permutation& t) const {
  if (!target_.contains(t))
    throw PreconditionError("lift: element not in target group");
  if (identity_)
    return t;
  // image(g) depends only on the coset Ng, and coset 0 goes to coset t(0).
  return reps_[t(0)];
}

PermGroup QuotientMap::image(const PermGroup& S) const {
  if (!source_.contains(S))
    throw PreconditionError("image_subgroup: S is not a subgroup of the source");
  if (identity_)
    return S;
  std::vector<Permutation> gens;
  for (const auto& g : S.generators())
    gens.push_back(image(g));
  return PermGroup(target_.degree(), std::move(gens));
}

PermGroup QuotientMap::preimage(const PermGroup& T) const {
  if (T.degree() != target_.degree() || !target_.contains(T))
    throw PreconditionError("preimage_subgroup: T is not a subgroup of the target");
  if (identity_)
    return T;
  SubgroupBuilder builder(kernel_);
  for (const auto& t : T.generators())
    builder.add(lift(t));
  return builder.build();
}

QuotientMap quotient_by(const PermGroup& G, const PermGroup& N) { return QuotientMap(G, N); }

PermGroup image_subgroup(const QuotientMap& q, const PermGroup& S) { return q.image(S); }

PermGroup preimage_subgroup(const QuotientMap& q, const PermGroup& T) { return q.preimage(T); }

}  // namespace hallbound
