#ifndef LATTICELAB_TEST_FIXTURES_HPP
#define LATTICELAB_TEST_FIXTURES_HPP

#include <vector>

#include "latticelab/latticelab.hpp"

namespace fixtures {

inline std::vector<latticelab::CatalogEntry> const &bundled_catalog()
{
  static auto const catalog =
    latticelab::load_catalog(LATTICELAB_BUNDLED_CATALOG, {true, false, latticelab::kDefaultCap});
  return catalog;
}

/// Every bundled group, in file order.
inline std::vector<latticelab::FiniteGroup> const &bundled_groups()
{
  static auto const groups = [] {
    std::vector<latticelab::FiniteGroup> out;
    for (auto const &e : bundled_catalog())
      out.push_back(latticelab::build_group(e));
    return out;
  }();
  return groups;
}

inline latticelab::FiniteGroup group(char const *expr)
{
  return latticelab::resolve(expr, bundled_catalog());
}

} // namespace fixtures

#endif
