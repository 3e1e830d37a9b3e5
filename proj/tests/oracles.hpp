#ifndef LATTICELAB_TEST_ORACLES_HPP
#define LATTICELAB_TEST_ORACLES_HPP

// Slow reference computations over raw permutations. None of these use the
// element table, bitmasks or lattice code they are compared against.

#include <set>
#include <vector>

#include "latticelab/permutation.hpp"

namespace oracle {

using latticelab::Permutation;
using PermSet = std::set<Permutation>;

/// Closure of a set of permutations under composition.
inline PermSet closure(PermSet const &gens, std::size_t degree)
{
  PermSet out{Permutation::identity(degree)};
  std::vector<Permutation> queue(out.begin(), out.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto const &g : gens) {
      Permutation y = latticelab::compose(queue[q], g);
      if (out.insert(y).second)
        queue.push_back(y);
    }
  }
  return out;
}

/// All subgroups, as joins of cyclic subgroups iterated to a fixpoint.
inline std::set<PermSet> all_subgroups(std::vector<Permutation> const &elements)
{
  std::size_t degree = elements.front().degree();
  std::set<PermSet> subs;
  for (auto const &g : elements)
    subs.insert(closure({g}, degree));

  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<PermSet> current(subs.begin(), subs.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        PermSet gens = current[i];
        gens.insert(current[j].begin(), current[j].end());
        if (subs.insert(closure(gens, degree)).second)
          grown = true;
      }
    }
  }
  return subs;
}

/// Subgroup generated by [x, y] for x in a, y in b.
inline PermSet commutator_subgroup(PermSet const &a, PermSet const &b, std::size_t degree)
{
  PermSet comms;
  for (auto const &x : a)
    for (auto const &y : b)
      comms.insert(latticelab::compose(
        latticelab::compose(latticelab::inverse(x), latticelab::inverse(y)),
        latticelab::compose(x, y)));
  return closure(comms, degree);
}

/// Lower central series reaches the identity.
inline bool is_nilpotent(std::vector<Permutation> const &elements)
{
  std::size_t degree = elements.front().degree();
  PermSet G(elements.begin(), elements.end());
  PermSet term = G;
  while (term.size() > 1) {
    PermSet next = commutator_subgroup(term, G, degree);
    if (next.size() == term.size())
      return false;
    term = std::move(next);
  }
  return true;
}

/// Derived series reaches the identity.
inline bool is_solvable(std::vector<Permutation> const &elements)
{
  std::size_t degree = elements.front().degree();
  PermSet term(elements.begin(), elements.end());
  while (term.size() > 1) {
    PermSet next = commutator_subgroup(term, term, degree);
    if (next.size() == term.size())
      return false;
    term = std::move(next);
  }
  return true;
}

/// The set HK, formed element by element.
inline PermSet set_product(PermSet const &H, PermSet const &K)
{
  PermSet out;
  for (auto const &h : H)
    for (auto const &k : K)
      out.insert(latticelab::compose(h, k));
  return out;
}

} // namespace oracle

#endif
