#ifndef LATTICELAB_PROPERTIES_HPP
#define LATTICELAB_PROPERTIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"

namespace latticelab {

inline bool is_cyclic(FiniteGroup const &G)
{
  for (ElementIndex x = 0; x < G.order(); ++x) {
    if (element_order(G, x) == G.order())
      return true;
  }
  return false;
}

inline bool is_abelian(FiniteGroup const &G)
{
  auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (G.multiply(gens[i], gens[j]) != G.multiply(gens[j], gens[i]))
        return false;
    }
  }
  return true;
}

/// Commutator subgroup [H, H] of a subgroup H of G.
///
/// Small subgroups use every commutator of member pairs. Larger ones take the
/// commutators of generator pairs and close under conjugation by H, which
/// yields the same subgroup.
inline Subgroup derived_of(FiniteGroup const &G, Subgroup const &H)
{
  std::vector<ElementIndex> gens;
  ElementSet seen(G.order());
  auto add = [&](ElementIndex c) {
    if (c != FiniteGroup::identity() && !seen.contains(c)) {
      seen.insert(c);
      gens.push_back(c);
    }
  };

  if (H.order <= 256) {
    auto members = H.members.members();
    for (ElementIndex x : members)
      for (ElementIndex y : members)
        add(commutator(G, x, y));
    return make_subgroup(G, std::move(gens));
  }

  for (std::size_t i = 0; i < H.generators.size(); ++i)
    for (std::size_t j = i + 1; j < H.generators.size(); ++j)
      add(commutator(G, H.generators[i], H.generators[j]));

  Subgroup D = make_subgroup(G, gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (ElementIndex h : H.generators) {
      std::vector<ElementIndex> extra;
      D.members.for_each([&](ElementIndex x) {
        ElementIndex c = conjugate(G, h, x);
        if (!D.members.contains(c))
          extra.push_back(c);
      });
      if (extra.empty())
        continue;
      D.members = extend_subgroup(G, D.members, D.generators, {&extra.front(), 1});
      D.generators.push_back(extra.front());
      D.order = D.members.count();
      grown = true;
    }
  }
  return D;
}

inline Subgroup derived_subgroup(FiniteGroup const &G)
{
  return derived_of(G, whole_subgroup(G));
}

/// G, G', G'', ... up to the first repeated term.
inline std::vector<Subgroup> derived_series(FiniteGroup const &G)
{
  std::vector<Subgroup> series{whole_subgroup(G)};
  while (true) {
    Subgroup next = derived_of(G, series.back());
    if (next.order == series.back().order)
      break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(FiniteGroup const &G)
{
  return derived_series(G).back().order == 1;
}

/// Number of steps for the derived series to reach 1; empty when it stalls above 1.
inline std::optional<std::size_t> derived_length(FiniteGroup const &G)
{
  auto series = derived_series(G);
  if (series.back().order != 1)
    return std::nullopt;
  return series.size() - 1;
}

inline bool is_perfect(FiniteGroup const &G)
{
  return derived_subgroup(G).order == G.order();
}

/// Every Sylow subgroup is normal, i.e. unique.
inline bool is_nilpotent(FiniteGroup const &G, SubgroupLattice const &lattice)
{
  for (std::size_t p : prime_factors(G.order())) {
    if (sylow(G, lattice, p).size() != 1)
      return false;
  }
  return true;
}

inline bool is_nilpotent(FiniteGroup const &G)
{
  return is_nilpotent(G, all_subgroups(G));
}

/// Searches for 1 = N0 < N1 < ... < Nk = G with each Ni normal in G and each
/// index prime, as reachability over normal subgroups along prime-index edges.
inline bool is_supersolvable(FiniteGroup const &/*G*/, SubgroupLattice const &lattice)
{
  auto normal = lattice.normal_indices();
  std::vector<bool> reached(normal.size(), false);
  reached[0] = true; // the trivial subgroup comes first in lattice order
  for (std::size_t a = 0; a < normal.size(); ++a) {
    if (!reached[a])
      continue;
    Subgroup const &lo = lattice[normal[a]];
    for (std::size_t b = a + 1; b < normal.size(); ++b) {
      Subgroup const &hi = lattice[normal[b]];
      if (reached[b] || hi.order % lo.order != 0 || !is_prime(hi.order / lo.order))
        continue;
      if (lo.members.is_subset_of(hi.members))
        reached[b] = true;
    }
  }
  return reached.back();
}

inline bool is_supersolvable(FiniteGroup const &G)
{
  return is_supersolvable(G, all_subgroups(G));
}

/// A subgroup of every order dividing |G| exists.
inline bool is_lagrangian(FiniteGroup const &G, SubgroupLattice const &lattice)
{
  std::vector<bool> present(G.order() + 1, false);
  for (auto const &H : lattice.subgroups())
    present[H.order] = true;
  for (std::size_t d = 1; d <= G.order(); ++d) {
    if (G.order() % d == 0 && !present[d])
      return false;
  }
  return true;
}

inline bool is_lagrangian(FiniteGroup const &G)
{
  return is_lagrangian(G, all_subgroups(G));
}

struct PropertyReport
{
  std::size_t order = 0;
  std::size_t sub_count = 0;
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_supersolvable = false;
  bool is_solvable = false;
  bool is_perfect = false;
  bool is_lagrangian = false;
  /// Empty when the derived series never reaches the trivial group.
  std::optional<std::size_t> derived_length;
};

inline PropertyReport report(FiniteGroup const &G, SubgroupLattice const &lattice)
{
  PropertyReport r;
  r.order = G.order();
  r.sub_count = lattice.count();
  r.is_cyclic = is_cyclic(G);
  r.is_abelian = is_abelian(G);
  r.is_nilpotent = is_nilpotent(G, lattice);
  r.is_supersolvable = is_supersolvable(G, lattice);
  auto series = derived_series(G);
  r.is_solvable = series.back().order == 1;
  r.is_perfect = series.size() == 1;
  if (r.is_solvable)
    r.derived_length = series.size() - 1;
  r.is_lagrangian = is_lagrangian(G, lattice);
  return r;
}

inline PropertyReport report(FiniteGroup const &G, std::size_t cap = kDefaultCap)
{
  return report(G, all_subgroups(G, cap));
}

} // namespace latticelab

#endif // LATTICELAB_PROPERTIES_HPP
