#include "hallbound/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "hallbound/config.hpp"
#include "hallbound/group_ops.hpp"
#include "hallbound/primes.hpp"
#include "hallbound/quotient.hpp"

namespace hallbound {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains(b);
}

bool sort_key_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.generators() < b.generators();
}

// One element of prime order from each class of such elements, up to
// taking powers. Enumerates G.
std::vector<Permutation> prime_order_class_reps(const PermGroup& G) {
  std::vector<Permutation> reps;
  PermSet seen;
  G.for_each_element([&](const Permutation& x) {
    if (x.is_identity() || seen.count(x))
      return;
    const auto p = x.order();
    if (!is_prime(p))
      return;
    reps.push_back(x);
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (const auto& g : G.generators()) {
        auto y = conjugate(cls[head], g);
        if (seen.insert(y).second)
          cls.push_back(std::move(y));
      }
    for (const auto& y : cls) {
      auto z = y;
      for (std::uint64_t k = 2; k < p; ++k) {
        z = z * y;
        seen.insert(z);
      }
    }
  });
  return reps;
}

void add_unique(std::vector<PermGroup>& list, const PermGroup& N) {
  for (const auto& M : list)
    if (same_group(M, N))
      return;
  list.push_back(N);
}

std::vector<PermGroup> inclusion_minimal(const std::vector<PermGroup>& cands) {
  std::vector<PermGroup> out;
  for (const auto& N : cands) {
    bool minimal = true;
    for (const auto& M : cands)
      if (M.order() < N.order() && N.contains(M)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(N);
  }
  return out;
}

std::vector<PermGroup> minimal_normals_exhaustive(const PermGroup& G) {
  std::vector<PermGroup> closures;
  for (const auto& x : prime_order_class_reps(G))
    add_unique(closures, normal_closure(G, x));
  return inclusion_minimal(closures);
}

// Simplicity for a group small enough to enumerate: every prime-order
// element must normally generate the whole group.
bool is_simple_enumerable(const PermGroup& T) {
  if (T.is_trivial())
    return false;
  if (is_abelian(T))
    return is_prime(T.order());
  for (const auto& x : prime_order_class_reps(T))
    if (normal_closure(T, x).order() != T.order())
      return false;
  return true;
}

// Some power of x with prime order, or nullopt for the identity.
std::optional<Permutation> prime_power_of(const Permutation& x, std::mt19937_64& rng) {
  const auto o = x.order();
  if (o == 1)
    return std::nullopt;
  auto ps = prime_divisors(o);
  const auto q = ps[rng() % ps.size()];
  return x.pow(o / q);
}

std::uint64_t seed_for(const PermGroup& G) {
  std::uint64_t h = limits().seed ^ 0x9e3779b97f4a7c15ULL;
  for (const auto& g : G.generators())
    h = h * 1099511628211ULL ^ PermutationHash{}(g);
  return h;
}

// Multiplies orders, returning false once the product passes `bound`.
bool product_within(const std::vector<PermGroup>& groups, std::uint64_t bound, std::uint64_t& out) {
  unsigned __int128 acc = 1;
  for (const auto& T : groups) {
    acc *= T.order();
    if (acc > bound)
      return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

std::optional<std::vector<PermGroup>> simple_factors_sampled(const PermGroup& N) {
  std::mt19937_64 rng(seed_for(N));
  const auto cap = limits().enumeration_cap;
  std::vector<PermGroup> found;
  const unsigned samples = limits().structure_samples;
  for (unsigned s = 0; s < samples; ++s) {
    auto x = prime_power_of(N.random_element(rng), rng);
    if (!x)
      continue;
    bool known = false;
    for (const auto& T : found)
      if (T.contains(*x)) {
        known = true;
        break;
      }
    if (known)
      continue;
    PermGroup T = normal_closure(N, *x);
    if (is_abelian(T))
      return std::nullopt;
    // Descend: closures of random elements of T are products of fewer factors.
    for (int tries = 0; tries < 24; ++tries) {
      auto y = prime_power_of(T.random_element(rng), rng);
      if (!y)
        continue;
      auto U = normal_closure(N, *y);
      if (U.order() < T.order())
        T = U;
    }
    if (T.order() > cap || !is_simple_enumerable(T))
      continue;
    add_unique(found, T);
    std::uint64_t prod = 0;
    if (product_within(found, N.order(), prod) && prod == N.order())
      return found;
  }
  return std::nullopt;
}

bool certify_direct_product(const PermGroup& N, const std::vector<PermGroup>& factors) {
  std::uint64_t prod = 0;
  if (!product_within(factors, N.order(), prod) || prod != N.order())
    return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      for (const auto& a : factors[i].generators())
        for (const auto& b : factors[j].generators())
          if (a * b != b * a)
            return false;
  SubgroupBuilder b(N.degree());
  for (const auto& T : factors)
    for (const auto& g : T.generators())
      b.add(g);
  return b.order() == N.order();
}

// Products of the G-orbits on a set of simple factors normal in some N <| G.
std::vector<PermGroup> orbit_products(const PermGroup& G, const std::vector<PermGroup>& factors) {
  std::vector<int> orbit_of(factors.size(), -1);
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (orbit_of[i] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> queue{i};
    orbit_of[i] = id;
    SubgroupBuilder b(G.degree());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto& T = factors[queue[head]];
      for (const auto& t : T.generators())
        b.add(t);
      for (const auto& g : G.generators()) {
        auto C = conjugate_group(T, g);
        std::size_t k = 0;
        while (k < factors.size() && !same_group(factors[k], C))
          ++k;
        if (k == factors.size())
          throw EngineError("orbit_products: conjugate of a simple factor not among the factors");
        if (orbit_of[k] < 0) {
          orbit_of[k] = id;
          queue.push_back(k);
        }
      }
    }
    out.push_back(b.build());
  }
  return out;
}

std::vector<PermGroup> minimal_normals_sampled(const PermGroup& G) {
  std::mt19937_64 rng(seed_for(G));
  std::vector<PermGroup> closures;
  for (unsigned s = 0; s < limits().structure_samples; ++s) {
    auto x = prime_power_of(G.random_element(rng), rng);
    if (x)
      add_unique(closures, normal_closure(G, *x));
  }
  std::vector<PermGroup> result;
  for (const auto& N : inclusion_minimal(closures)) {
    if (is_abelian(N))
      throw CapExceeded("minimal_normal_subgroups: abelian normal subgroup in a group of order " +
                        std::to_string(G.order()) + " above the enumeration cap");
    auto factors = simple_direct_factors(N);
    if (!factors)
      throw CapExceeded("minimal_normal_subgroups: could not split a normal subgroup of order " +
                        std::to_string(N.order()) + " into simple factors");
    for (const auto& M : orbit_products(G, *factors))
      add_unique(result, M);
  }
  if (result.empty())
    throw CapExceeded("minimal_normal_subgroups: no normal subgroup found by sampling");
  SubgroupBuilder b(G.degree());
  for (const auto& M : result)
    for (const auto& g : M.generators())
      b.add(g);
  if (!has_trivial_centralizer(G, b.build()))
    throw CapExceeded("minimal_normal_subgroups: sampled socle has nontrivial centralizer");
  return result;
}

}  // namespace

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G) {
  if (G.is_trivial())
    throw PreconditionError("minimal_normal_subgroups: trivial group");
  auto out = G.order() <= limits().enumeration_cap ? minimal_normals_exhaustive(G)
                                                   : minimal_normals_sampled(G);
  std::sort(out.begin(), out.end(), sort_key_less);
  return out;
}

std::optional<std::vector<PermGroup>> simple_direct_factors(const PermGroup& N) {
  if (N.is_trivial() || is_abelian(N))
    return std::nullopt;
  std::optional<std::vector<PermGroup>> factors;
  if (N.order() <= limits().enumeration_cap) {
    auto mins = minimal_normals_exhaustive(N);
    for (const auto& T : mins)
      if (!is_simple_enumerable(T) || is_abelian(T))
        return std::nullopt;
    factors = std::move(mins);
  } else {
    factors = simple_factors_sampled(N);
  }
  if (!factors || !certify_direct_product(N, *factors))
    return std::nullopt;
  std::sort(factors->begin(), factors->end(), sort_key_less);
  return factors;
}

bool has_trivial_centralizer(const PermGroup& G, const PermGroup& S) {
  const std::size_t n = G.degree();
  if (S.degree() != n)
    throw PreconditionError("has_trivial_centralizer: degree mismatch");
  if (G.is_trivial())
    return true;
  if (S.is_trivial())
    return false;

  // Orbits of S with a spanning tree: point p is reached from parent[p] by
  // generator via[p]. A centralizing c is fixed by its value on each root.
  const auto& gens = S.generators();
  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<Point>> orbits;
  std::vector<Point> parent(n);
  std::vector<std::size_t> via(n);
  for (Point r = 0; r < n; ++r) {
    if (orbit_id[r] >= 0)
      continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<Point> orb{r};
    orbit_id[r] = id;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Point q = gens[k](orb[head]);
        if (orbit_id[q] < 0) {
          orbit_id[q] = id;
          parent[q] = orb[head];
          via[q] = k;
          orb.push_back(q);
        }
      }
    orbits.push_back(std::move(orb));
  }

  constexpr std::uint64_t kBudget = 1'000'000;
  std::uint64_t nodes = 0;
  std::vector<Point> img(n);
  std::vector<bool> used(n, false);
  bool nontrivial_found = false;

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (nontrivial_found)
      return;
    if (++nodes > kBudget)
      throw CapExceeded("has_trivial_centralizer: search budget exhausted");
    if (i == orbits.size()) {
      Permutation c(img);
      if (!c.is_identity() && G.contains(c))
        nontrivial_found = true;
      return;
    }
    const auto& orb = orbits[i];
    for (Point y = 0; y < n; ++y) {
      if (used[y] || orbits[orbit_id[y]].size() != orb.size())
        continue;
      img[orb[0]] = y;
      bool ok = true;
      std::size_t assigned = 1;
      used[y] = true;
      for (; assigned < orb.size(); ++assigned) {
        const Point p = orb[assigned];
        const Point v = gens[via[p]](img[parent[p]]);
        if (used[v]) {
          ok = false;
          break;
        }
        img[p] = v;
        used[v] = true;
      }
      if (ok)
        for (Point p : orb) {
          for (const auto& s : gens)
            if (img[s(p)] != s(img[p])) {
              ok = false;
              break;
            }
          if (!ok)
            break;
        }
      if (ok)
        search(i + 1);
      for (std::size_t k = 0; k < assigned; ++k)
        used[img[orb[k]]] = false;
      if (nontrivial_found)
        return;
    }
  };
  search(0);
  return !nontrivial_found;
}

SocleDecomposition socle(const PermGroup& G) {
  SocleDecomposition out;
  if (G.is_trivial()) {
    out.socle = G;
    return out;
  }
  SubgroupBuilder b(G.degree());
  // The socle is the direct product of a subset of the minimal normal
  // subgroups; keep each one not already inside the product so far.
  for (const auto& M : minimal_normal_subgroups(G)) {
    bool inside = true;
    for (const auto& g : M.generators())
      inside = !b.add(g) && inside;
    if (inside)
      continue;
    if (is_abelian(M)) {
      out.factors.push_back(M);
      out.abelian_flags.push_back(true);
      continue;
    }
    auto fs = simple_direct_factors(M);
    if (!fs)
      throw EngineError("socle: non-abelian minimal normal subgroup is not a product of simples");
    for (const auto& T : *fs) {
      out.factors.push_back(T);
      out.abelian_flags.push_back(false);
    }
  }
  out.socle = b.build();
  return out;
}

bool is_soluble(const PermGroup& G) { return perfect_core(G).is_trivial(); }

bool is_nilpotent(const PermGroup& G) {
  PermGroup cur = G;
  for (;;) {
    if (cur.is_trivial())
      return true;
    auto next = commutator_subgroup(cur, G, G);
    if (next.order() == cur.order())
      return false;
    cur = std::move(next);
  }
}

bool is_perfect(const PermGroup& G) { return derived_subgroup(G).order() == G.order(); }

bool is_p_soluble(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError("is_p_soluble: " + std::to_string(p) + " is not prime");
  if (G.order() % p != 0 || is_soluble(G))
    return true;
  const auto mins = minimal_normal_subgroups(G);
  const auto& N = mins.front();
  if (!is_abelian(N) && N.order() % p == 0)
    return false;
  return is_p_soluble(quotient_by(G, N).target(), p);
}

bool is_simple(const PermGroup& G) {
  if (G.is_trivial())
    return false;
  if (is_abelian(G))
    return is_prime(G.order());
  if (G.order() <= limits().enumeration_cap)
    return is_simple_enumerable(G);
  const auto mins = minimal_normal_subgroups(G);
  return mins.size() == 1 && mins.front().order() == G.order();
}

PermGroup radical_by(const PermGroup& G,
                     const std::function<bool(const PermGroup&)>& admissible) {
  if (G.is_trivial())
    return G;
  for (const auto& N : minimal_normal_subgroups(G)) {
    if (!admissible(N))
      continue;
    auto q = quotient_by(G, N);
    return q.preimage(radical_by(q.target(), admissible));
  }
  return PermGroup::trivial(G.degree());
}

PermGroup soluble_radical(const PermGroup& G) {
  return radical_by(G, [](const PermGroup& N) { return is_abelian(N); });
}

}  // namespace hallbound
