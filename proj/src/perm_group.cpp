#include "hallbound/perm_group.hpp"

#include <set>

#include "hallbound/config.hpp"

namespace hallbound {

namespace {

// Explicit transversals are cached while orbit length * degree stays below this.
constexpr std::size_t kTransversalCacheEntries = std::size_t{1} << 20;

}  // namespace

StabChain::StabChain(std::size_t degree) : degree_(degree), levels_(degree) {
  for (std::size_t l = 0; l < degree; ++l)
    levels_[l].orbit = {static_cast<Point>(l)};
}

void StabChain::push_generator(std::size_t level, const Permutation& g) {
  levels_[level].gens.push_back(g);
  levels_[level].gens_inv.push_back(g.inverse());
}

void StabChain::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  const auto root = static_cast<Point>(level);
  L.orbit = {root};
  L.label.clear();
  L.pos.clear();
  L.u.clear();
  L.u_inv.clear();
  if (L.gens.empty())
    return;

  L.label.assign(degree_, -1);
  L.label[root] = -2;
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    const Point x = L.orbit[head];
    for (std::size_t k = 0; k < L.gens.size(); ++k) {
      const Point y = L.gens[k](x);
      if (L.label[y] == -1) {
        L.label[y] = static_cast<std::int32_t>(k);
        L.orbit.push_back(y);
      }
    }
  }
  if (L.orbit.size() == 1) {
    L.label.clear();
    return;
  }
  if (L.orbit.size() * degree_ > kTransversalCacheEntries)
    return;

  L.pos.assign(degree_, -1);
  for (std::size_t i = 0; i < L.orbit.size(); ++i)
    L.pos[L.orbit[i]] = static_cast<std::int32_t>(i);
  L.u.reserve(L.orbit.size());
  L.u.push_back(Permutation::identity(degree_));
  for (std::size_t i = 1; i < L.orbit.size(); ++i) {
    const Point x = L.orbit[i];
    const auto k = static_cast<std::size_t>(L.label[x]);
    const Point prev = L.gens_inv[k](x);
    L.u.push_back(L.u[static_cast<std::size_t>(L.pos[prev])] * L.gens[k]);
  }
  L.u_inv.reserve(L.u.size());
  for (const auto& u : L.u)
    L.u_inv.push_back(u.inverse());
}

bool StabChain::orbit_contains(std::size_t level, Point x) const {
  const Level& L = levels_[level];
  if (L.orbit.size() == 1)
    return x == level;
  return L.label[x] != -1;
}

Permutation StabChain::transversal(std::size_t level, Point x) const {
  const Level& L = levels_[level];
  if (!L.pos.empty())
    return L.u[static_cast<std::size_t>(L.pos[x])];
  if (L.orbit.size() == 1)
    return Permutation::identity(degree_);
  std::vector<std::size_t> path;
  Point cur = x;
  while (L.label[cur] != -2) {
    const auto k = static_cast<std::size_t>(L.label[cur]);
    path.push_back(k);
    cur = L.gens_inv[k](cur);
  }
  Permutation u = Permutation::identity(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * L.gens[*it];
  return u;
}

Permutation StabChain::transversal_inverse(std::size_t level, Point x) const {
  const Level& L = levels_[level];
  if (!L.pos.empty())
    return L.u_inv[static_cast<std::size_t>(L.pos[x])];
  return transversal(level, x).inverse();
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < degree_; ++l) {
    const Point x = g(static_cast<Point>(l));
    if (levels_[l].orbit.size() == 1) {
      if (x != l)
        return {std::move(g), l};
      continue;
    }
    if (!orbit_contains(l, x))
      return {std::move(g), l};
    if (x != l)
      g = g * transversal_inverse(l, x);
  }
  return {std::move(g), degree_};
}

void StabChain::complete_from(std::size_t start) {
  auto i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    rebuild_orbit(level);
    bool grew = false;
    // Copy: pushing residues may touch deeper levels only, but keep the loop simple.
    const std::vector<Point> orbit = levels_[level].orbit;
    const std::size_t ngens = levels_[level].gens.size();
    for (std::size_t oi = 0; oi < orbit.size() && !grew; ++oi) {
      const Point x = orbit[oi];
      const Permutation ux = transversal(level, x);
      for (std::size_t k = 0; k < ngens; ++k) {
        const Permutation& s = levels_[level].gens[k];
        const Point y = s(x);
        Permutation schreier = ux * s * transversal_inverse(level, y);
        if (schreier.is_identity())
          continue;
        auto [residue, stop] = strip(std::move(schreier), level + 1);
        if (stop < degree_) {
          for (std::size_t l = level + 1; l <= stop; ++l)
            push_generator(l, residue);
          i = static_cast<std::ptrdiff_t>(stop);
          grew = true;
          break;
        }
      }
    }
    if (!grew)
      --i;
  }
}

bool StabChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_)
    throw PreconditionError("generator degree mismatch");
  auto [residue, stop] = strip(g, 0);
  if (stop == degree_)
    return false;
  for (std::size_t l = 0; l <= stop; ++l)
    push_generator(l, residue);
  complete_from(stop);
  return true;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw PreconditionError("membership test: degree mismatch");
  return strip(g, 0).second == degree_;
}

std::uint64_t StabChain::order() const {
  unsigned __int128 total = 1;
  for (const auto& L : levels_) {
    total *= L.orbit.size();
    if (total > static_cast<unsigned __int128>(UINT64_MAX))
      throw EngineError("group order overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

const std::vector<Point>& StabChain::orbit(std::size_t level) const {
  return levels_[level].orbit;
}

const std::vector<Permutation>& StabChain::generators(std::size_t level) const {
  return levels_[level].gens;
}

std::vector<std::size_t> StabChain::nontrivial_levels() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < degree_; ++l)
    if (levels_[l].orbit.size() > 1)
      out.push_back(l);
  return out;
}

std::vector<Permutation> StabChain::strong_generators() const {
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  for (const auto& L : levels_)
    for (const auto& g : L.gens)
      if (seen.insert(g).second)
        out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : state_(std::make_shared<State>()) {
  state_->degree = degree;
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw PreconditionError("generator degree does not match group degree");
    if (!g.is_identity())
      state_->generators.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, StabChain chain)
    : PermGroup(degree, std::move(generators)) {
  if (chain.degree() != degree)
    throw PreconditionError("chain degree does not match group degree");
  std::call_once(state_->built, [&] {
    state_->chain = std::make_unique<StabChain>(std::move(chain));
  });
}

const StabChain& PermGroup::chain() const {
  std::call_once(state_->built, [this] {
    auto c = std::make_unique<StabChain>(state_->degree);
    for (const auto& g : state_->generators)
      c->add_generator(g);
    state_->chain = std::move(c);
  });
  return *state_->chain;
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree())
    throw PreconditionError("membership test: degree mismatch");
  return chain().contains(x);
}

bool PermGroup::contains(const PermGroup& other) const {
  if (other.degree() != degree())
    throw PreconditionError("subgroup test: degree mismatch");
  for (const auto& g : other.generators())
    if (!chain().contains(g))
      return false;
  return true;
}

std::vector<Point> PermGroup::orbit(Point point) const {
  if (point >= degree())
    throw PreconditionError("orbit: point out of range");
  std::vector<bool> seen(degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& g : generators()) {
      const Point y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  require_enumerable(order(), "element enumeration");
  const StabChain& c = chain();
  const auto levels = c.nontrivial_levels();
  std::vector<std::vector<Permutation>> transversals;
  for (auto l : levels) {
    std::vector<Permutation> t;
    for (Point x : c.orbit(l))
      t.push_back(c.transversal(l, x));
    transversals.push_back(std::move(t));
  }
  // Every element factors uniquely as u_k * ... * u_0 with u_i from level i.
  std::function<void(std::ptrdiff_t, const Permutation&)> rec =
      [&](std::ptrdiff_t idx, const Permutation& cur) {
        if (idx < 0) {
          visit(cur);
          return;
        }
        for (const auto& u : transversals[static_cast<std::size_t>(idx)])
          rec(idx - 1, cur * u);
      };
  rec(static_cast<std::ptrdiff_t>(levels.size()) - 1, identity());
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  const StabChain& c = chain();
  const auto levels = c.nontrivial_levels();
  Permutation g = identity();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const auto& orb = c.orbit(*it);
    std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
    g = g * c.transversal(*it, orb[pick(rng)]);
  }
  return g;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

SubgroupBuilder::SubgroupBuilder(const PermGroup& start)
    : degree_(start.degree()), gens_(start.generators()), chain_(start.chain()) {}

bool SubgroupBuilder::add(const Permutation& x) {
  if (!chain_.add_generator(x))
    return false;
  gens_.push_back(x);
  return true;
}

}  // namespace hallbound
