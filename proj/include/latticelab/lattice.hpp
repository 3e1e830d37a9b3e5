#ifndef LATTICELAB_LATTICE_HPP
#define LATTICELAB_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace latticelab {

/// A subgroup of a FiniteGroup as a membership bitmask over its element indices.
struct Subgroup
{
  ElementSet members;
  std::size_t order = 0;
  /// Element indices that generate the subgroup (not necessarily minimal).
  std::vector<ElementIndex> generators;

  bool contains(ElementIndex i) const { return members.contains(i); }

  friend bool operator==(Subgroup const &a, Subgroup const &b) { return a.members == b.members; }
};

inline Subgroup make_subgroup(FiniteGroup const &G, std::vector<ElementIndex> gens)
{
  Subgroup H;
  H.members = generate(G, gens);
  H.order = H.members.count();
  H.generators = std::move(gens);
  return H;
}

inline Subgroup trivial_subgroup(FiniteGroup const &G)
{
  return make_subgroup(G, {});
}

inline Subgroup whole_subgroup(FiniteGroup const &G)
{
  Subgroup H;
  H.members = whole_set(G);
  H.order = G.order();
  H.generators.assign(G.generators().begin(), G.generators().end());
  return H;
}

/// Every subgroup of a group, sorted by (order, member list), with normality flags.
class SubgroupLattice
{
public:
  SubgroupLattice() = default;

  SubgroupLattice(std::vector<Subgroup> subgroups, std::vector<bool> normal)
    : subgroups_(std::move(subgroups)), normal_(std::move(normal))
  {
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      index_.emplace(subgroups_[i].members, i);
  }

  std::size_t count() const { return subgroups_.size(); }
  std::vector<Subgroup> const &subgroups() const { return subgroups_; }
  Subgroup const &operator[](std::size_t i) const { return subgroups_[i]; }
  bool is_normal(std::size_t i) const { return normal_[i]; }
  std::vector<bool> const &normal_flags() const { return normal_; }

  Subgroup const &trivial() const { return subgroups_.front(); }
  Subgroup const &whole() const { return subgroups_.back(); }

  std::optional<std::size_t> find(ElementSet const &members) const
  {
    auto it = index_.find(members);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> normal_indices() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < normal_.size(); ++i) {
      if (normal_[i])
        out.push_back(i);
    }
    return out;
  }

private:
  std::vector<Subgroup> subgroups_;
  std::vector<bool> normal_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// True iff gHg^-1 = H for every generator g of G.
inline bool is_normal(FiniteGroup const &G, Subgroup const &H)
{
  for (ElementIndex g : G.generators()) {
    bool ok = true;
    H.members.for_each([&](ElementIndex h) {
      if (ok && !H.members.contains(conjugate(G, g, h)))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

namespace detail {

/// One representative per cyclic subgroup: the least index generating it.
inline std::vector<std::pair<ElementIndex, ElementSet>> cyclic_subgroups(FiniteGroup const &G)
{
  std::vector<std::pair<ElementIndex, ElementSet>> out;
  std::vector<bool> covered(G.order(), false);
  for (ElementIndex g = 0; g < G.order(); ++g) {
    if (covered[g])
      continue;
    std::vector<ElementIndex> powers{FiniteGroup::identity()};
    for (ElementIndex y = g; y != FiniteGroup::identity(); y = G.multiply(y, g))
      powers.push_back(y);
    std::size_t n = powers.size();
    ElementSet members(G.order());
    for (std::size_t k = 0; k < n; ++k) {
      members.insert(powers[k]);
      if (std::gcd(k, n) == 1)
        covered[powers[k]] = true;
    }
    covered[g] = true;
    out.emplace_back(g, std::move(members));
  }
  return out;
}

} // namespace detail

/// Enumerates all subgroups by cyclic extension.
///
/// Starting from the trivial subgroup, every known subgroup H is joined with
/// every cyclic subgroup <g> not contained in H; new joins are queued until no
/// new subgroup appears. Every subgroup is reached this way because it is
/// generated by finitely many of its elements, adjoined one at a time.
inline SubgroupLattice all_subgroups(FiniteGroup const &G, std::size_t cap = kDefaultCap)
{
  if (G.order() > cap)
    throw ClosureExceedsCap(cap);

  auto cyclics = detail::cyclic_subgroups(G);

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  found.push_back(trivial_subgroup(G));
  index.emplace(found.front().members, 0);

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const &[rep, cyc] : cyclics) {
      if (cyc.is_subset_of(found[i].members))
        continue;
      ElementIndex extra[] = {rep};
      ElementSet joined = extend_subgroup(G, found[i].members, found[i].generators, extra);
      if (index.contains(joined))
        continue;
      Subgroup J;
      J.order = joined.count();
      J.members = std::move(joined);
      J.generators = found[i].generators;
      J.generators.push_back(rep);
      index.emplace(J.members, found.size());
      found.push_back(std::move(J));
    }
  }

  std::sort(found.begin(), found.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.order != b.order)
      return a.order < b.order;
    return lex_less(a.members, b.members);
  });

  std::vector<bool> normal(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    normal[i] = is_normal(G, found[i]);
  return SubgroupLattice(std::move(found), std::move(normal));
}

inline std::size_t sub_count(FiniteGroup const &G, std::size_t cap = kDefaultCap)
{
  return all_subgroups(G, cap).count();
}

inline std::vector<std::size_t> prime_factors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

inline bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0)
      return false;
  }
  return true;
}

/// Largest power of p dividing n.
inline std::size_t p_part(std::size_t n, std::size_t p)
{
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

/// Subgroups of order equal to the full p-part of |G|; the trivial subgroup
/// alone when p does not divide |G|.
inline std::vector<Subgroup> sylow(FiniteGroup const &G, SubgroupLattice const &lattice,
                                   std::size_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  std::size_t target = p_part(G.order(), p);
  std::vector<Subgroup> out;
  for (auto const &H : lattice.subgroups()) {
    if (H.order == target)
      out.push_back(H);
  }
  return out;
}

inline std::vector<Subgroup> sylow(FiniteGroup const &G, std::size_t p)
{
  return sylow(G, all_subgroups(G), p);
}

/// Subgroups whose order is the product of the full p-parts of |G| over `primes`.
inline std::vector<Subgroup> hall(FiniteGroup const &G, SubgroupLattice const &lattice,
                                  std::set<std::size_t> const &primes)
{
  std::size_t target = 1;
  for (std::size_t p : primes) {
    if (!is_prime(p))
      throw InvalidArgument(std::to_string(p) + " is not prime");
    target *= p_part(G.order(), p);
  }
  std::vector<Subgroup> out;
  for (auto const &H : lattice.subgroups()) {
    if (H.order == target)
      out.push_back(H);
  }
  return out;
}

inline std::vector<Subgroup> hall(FiniteGroup const &G, std::set<std::size_t> const &primes)
{
  return hall(G, all_subgroups(G), primes);
}

/// HK = G, decided by |H||K| / |H n K| = |G|.
inline bool set_product_is_whole(FiniteGroup const &G, Subgroup const &H, Subgroup const &K)
{
  std::size_t meet = H.members.intersection_count(K.members);
  return H.order * K.order == G.order() * meet;
}

} // namespace latticelab

#endif // LATTICELAB_LATTICE_HPP
