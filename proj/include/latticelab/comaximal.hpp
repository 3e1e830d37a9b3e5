#ifndef LATTICELAB_COMAXIMAL_HPP
#define LATTICELAB_COMAXIMAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "lattice.hpp"

namespace latticelab {

/// Graph on the nontrivial proper subgroups; H ~ K iff HK = G.
struct ComaximalGraph
{
  std::vector<std::size_t> vertices; // lattice indices
  std::vector<std::string> labels;   // "order-<k>#<serial>"
  std::vector<std::vector<bool>> adjacency;

  std::size_t order() const { return vertices.size(); }

  std::size_t size() const
  {
    std::size_t edges = 0;
    for (std::size_t u = 0; u < adjacency.size(); ++u)
      for (std::size_t v = u + 1; v < adjacency.size(); ++v)
        edges += adjacency[u][v];
    return edges;
  }
};

inline ComaximalGraph build_comaximal(FiniteGroup const &G, SubgroupLattice const &lattice)
{
  ComaximalGraph g;
  std::size_t serial = 0, last_order = 0;
  for (std::size_t i = 1; i + 1 < lattice.count(); ++i) {
    std::size_t order = lattice[i].order;
    serial = order == last_order ? serial + 1 : 1;
    last_order = order;
    g.vertices.push_back(i);
    g.labels.push_back("order-" + std::to_string(order) + "#" + std::to_string(serial));
  }

  std::size_t n = g.vertices.size();
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool edge = set_product_is_whole(G, lattice[g.vertices[u]], lattice[g.vertices[v]]);
      g.adjacency[u][v] = g.adjacency[v][u] = edge;
    }
  }
  return g;
}

inline ComaximalGraph build_comaximal(FiniteGroup const &G, std::size_t cap = kDefaultCap)
{
  return build_comaximal(G, all_subgroups(G, cap));
}

struct GraphStats
{
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degrees; // descending
};

inline GraphStats graph_stats(ComaximalGraph const &g)
{
  GraphStats s;
  s.order = g.order();
  s.size = g.size();
  for (auto const &row : g.adjacency)
    s.degrees.push_back(static_cast<std::size_t>(std::count(row.begin(), row.end(), true)));
  std::sort(s.degrees.begin(), s.degrees.end(), std::greater<>());
  return s;
}

/// Size of a maximum independent set, by exact branch and bound.
inline std::size_t independence_number(ComaximalGraph const &g, std::size_t vertex_cap = 30)
{
  std::size_t n = g.order();
  if (n > vertex_cap || n > 64)
    throw TooLarge("independence number limited to " + std::to_string(std::min<std::size_t>(vertex_cap, 64)) +
                   " vertices, graph has " + std::to_string(n));

  std::vector<std::uint64_t> nbr(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacency[u][v])
        nbr[u] |= std::uint64_t{1} << v;

  std::size_t best = 0;
  std::function<void(std::uint64_t, std::size_t)> search = [&](std::uint64_t candidates,
                                                               std::size_t chosen) {
    if (candidates == 0) {
      best = std::max(best, chosen);
      return;
    }
    if (chosen + static_cast<std::size_t>(std::popcount(candidates)) <= best)
      return;
    int v = std::countr_zero(candidates);
    std::uint64_t bit = std::uint64_t{1} << v;
    // take v, then leave it out
    search(candidates & ~bit & ~nbr[v], chosen + 1);
    if ((candidates & nbr[v]) != 0)
      search(candidates & ~bit, chosen);
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search(all, 0);
  return best;
}

/// Undirected DOT document, vertices in lattice order, edges lower index first.
inline std::string to_dot(ComaximalGraph const &g)
{
  std::string out = "graph comaximal {\n";
  for (std::size_t u = 0; u < g.order(); ++u)
    out += "  " + std::to_string(u) + " [label=\"" + g.labels[u] + "\"];\n";
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacency[u][v])
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

/// `u,v` edge list, 0-based, one edge per line.
inline std::string to_csv(ComaximalGraph const &g)
{
  std::string out;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacency[u][v])
        out += std::to_string(u) + "," + std::to_string(v) + "\n";
  return out;
}

} // namespace latticelab

#endif // LATTICELAB_COMAXIMAL_HPP
