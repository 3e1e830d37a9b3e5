#ifndef LATTICELAB_GROUP_HPP
#define LATTICELAB_GROUP_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace latticelab {

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 5000;

/// Groups up to this order get a full multiplication table.
inline constexpr std::size_t kTableLimit = 1024;

/// Membership bitmask over the element indices of one group.
class ElementSet
{
public:
  ElementSet() = default;

  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
  {}

  std::size_t universe() const { return universe_; }

  bool contains(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void insert(ElementIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(ElementSet const &other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~other.words_[k])
        return false;
    }
    return true;
  }

  std::size_t intersection_count(ElementSet const &other) const
  {
    std::size_t n = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return n;
  }

  ElementSet intersection(ElementSet const &other) const
  {
    ElementSet out(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      out.words_[k] = words_[k] & other.words_[k];
    return out;
  }

  template<typename F>
  void for_each(F &&f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        auto bit = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<ElementIndex>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementIndex> members() const
  {
    std::vector<ElementIndex> out;
    out.reserve(count());
    for_each([&](ElementIndex i) { out.push_back(i); });
    return out;
  }

  std::span<std::uint64_t const> words() const { return words_; }

  /// Lexicographic order of the sorted member lists.
  friend bool lex_less(ElementSet const &a, ElementSet const &b)
  {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[k] & low) != 0;
      }
    }
    return false;
  }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class FiniteGroup;

FiniteGroup close_generators(std::span<Permutation const> gens, std::size_t cap = kDefaultCap,
                             std::string label = {});

/// A permutation group with every element materialized.
///
/// Elements are indexed in breadth-first discovery order from the identity
/// (index 0), expanding each element by the generators in listed order. The
/// product of indices i and j is the index of compose(elements[i], elements[j]).
class FiniteGroup
{
public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::string const &label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::vector<Permutation> const &elements() const { return elements_; }
  Permutation const &element(ElementIndex i) const { return elements_[i]; }

  std::vector<Permutation> const &generator_permutations() const { return generator_perms_; }

  /// Element indices of the generators, in listed order.
  std::span<ElementIndex const> generators() const { return generators_; }

  static constexpr ElementIndex identity() { return 0; }

  bool has_table() const { return !table_.empty(); }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const
  {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * elements_.size() + b];

    auto const &pa = elements_[a];
    auto const &pb = elements_[b];
    std::string key(base_.size() * sizeof(Point), '\0');
    for (std::size_t k = 0; k < base_.size(); ++k) {
      Point img = pa[pb[base_[k]]];
      std::memcpy(key.data() + k * sizeof(Point), &img, sizeof(Point));
    }
    return base_index_.at(key);
  }

  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }

  std::optional<ElementIndex> index_of(Permutation const &p) const
  {
    if (p.degree() != degree_)
      return std::nullopt;
    auto it = base_index_.find(base_key(p));
    if (it == base_index_.end() || elements_[it->second] != p)
      return std::nullopt;
    return it->second;
  }

  /// Points whose images determine an element uniquely.
  std::span<Point const> base() const { return base_; }

private:
  friend FiniteGroup close_generators(std::span<Permutation const>, std::size_t, std::string);

  std::string base_key(Permutation const &p) const
  {
    std::string key(base_.size() * sizeof(Point), '\0');
    for (std::size_t k = 0; k < base_.size(); ++k) {
      Point img = p[base_[k]];
      std::memcpy(key.data() + k * sizeof(Point), &img, sizeof(Point));
    }
    return key;
  }

  void choose_base()
  {
    // Refine the partition of elements by images of successive points until
    // every element sits in its own class.
    std::size_t n = elements_.size();
    std::vector<std::uint32_t> cls(n, 0);
    std::size_t classes = 1;
    for (Point beta = 0; beta < degree_ && classes < n; ++beta) {
      std::unordered_map<std::uint64_t, std::uint32_t> ids;
      std::vector<std::uint32_t> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t key = (std::uint64_t{cls[i]} << 32) | elements_[i][beta];
        auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
        next[i] = it->second;
      }
      if (ids.size() > classes) {
        classes = ids.size();
        cls = std::move(next);
        base_.push_back(beta);
      }
    }
    if (base_.empty())
      base_.push_back(0);

    base_index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      base_index_.emplace(base_key(elements_[i]), static_cast<ElementIndex>(i));
  }

  ElementIndex lookup(Permutation const &p) const { return base_index_.at(base_key(p)); }

  void build_table(std::vector<std::pair<ElementIndex, std::size_t>> const &parent)
  {
    // Row of e_i = e_p * g_k is row(e_p) composed with left multiplication by g_k.
    std::size_t n = elements_.size();
    std::vector<std::vector<ElementIndex>> left(generator_perms_.size(),
                                                std::vector<ElementIndex>(n));
    for (std::size_t k = 0; k < generator_perms_.size(); ++k) {
      auto const &g = generator_perms_[k];
      std::string key(base_.size() * sizeof(Point), '\0');
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t b = 0; b < base_.size(); ++b) {
          Point img = g[elements_[j][base_[b]]];
          std::memcpy(key.data() + b * sizeof(Point), &img, sizeof(Point));
        }
        left[k][j] = base_index_.at(key);
      }
    }

    table_.resize(n * n);
    for (std::size_t j = 0; j < n; ++j)
      table_[j] = static_cast<ElementIndex>(j);
    for (std::size_t i = 1; i < n; ++i) {
      auto [p, k] = parent[i];
      ElementIndex const *row_p = &table_[static_cast<std::size_t>(p) * n];
      ElementIndex *row_i = &table_[i * n];
      auto const &lk = left[k];
      for (std::size_t j = 0; j < n; ++j)
        row_i[j] = row_p[lk[j]];
    }
  }

  std::size_t degree_ = 1;
  std::string label_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generator_perms_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> inverses_;
  std::vector<Point> base_;
  std::unordered_map<std::string, ElementIndex> base_index_;
  std::vector<ElementIndex> table_;
};

/// Materializes <gens> by breadth-first closure from the identity.
///
/// Throws ClosureExceedsCap as soon as more than cap elements are found.
inline FiniteGroup close_generators(std::span<Permutation const> gens, std::size_t cap,
                                    std::string label)
{
  if (gens.empty())
    throw InvalidArgument("generator list must be nonempty");
  std::size_t degree = gens.front().degree();
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());
  }

  FiniteGroup G;
  G.degree_ = degree;
  G.label_ = std::move(label);
  G.generator_perms_.assign(gens.begin(), gens.end());
  G.elements_.push_back(Permutation::identity(degree));

  std::unordered_multimap<std::size_t, ElementIndex> seen;
  seen.emplace(hash_images(G.elements_[0].images()), 0);
  std::vector<std::pair<ElementIndex, std::size_t>> parent{{0, 0}};

  auto find = [&](Permutation const &p) -> std::optional<ElementIndex> {
    auto [lo, hi] = seen.equal_range(hash_images(p.images()));
    for (auto it = lo; it != hi; ++it) {
      if (G.elements_[it->second] == p)
        return it->second;
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = compose(G.elements_[i], gens[k]);
      if (find(y))
        continue;
      if (G.elements_.size() >= cap)
        throw ClosureExceedsCap(cap);
      auto idx = static_cast<ElementIndex>(G.elements_.size());
      seen.emplace(hash_images(y.images()), idx);
      G.elements_.push_back(std::move(y));
      parent.emplace_back(static_cast<ElementIndex>(i), k);
    }
  }

  for (auto const &g : gens)
    G.generators_.push_back(*find(g));

  G.choose_base();
  if (G.order() <= kTableLimit)
    G.build_table(parent);

  G.inverses_.resize(G.order());
  for (std::size_t i = 0; i < G.order(); ++i)
    G.inverses_[i] = G.lookup(latticelab::inverse(G.elements_[i]));
  return G;
}

inline FiniteGroup close_generators(std::vector<Permutation> const &gens,
                                    std::size_t cap = kDefaultCap, std::string label = {})
{
  return close_generators(std::span<Permutation const>(gens), cap, std::move(label));
}

/// Least k >= 1 with x^k = identity.
inline std::size_t element_order(FiniteGroup const &G, ElementIndex x)
{
  std::size_t k = 1;
  for (ElementIndex y = x; y != FiniteGroup::identity(); y = G.multiply(y, x))
    ++k;
  return k;
}

/// Index of x^-1 y^-1 x y.
inline ElementIndex commutator(FiniteGroup const &G, ElementIndex x, ElementIndex y)
{
  return G.multiply(G.multiply(G.inverse(x), G.inverse(y)), G.multiply(x, y));
}

inline ElementIndex conjugate(FiniteGroup const &G, ElementIndex g, ElementIndex h)
{
  return G.multiply(G.multiply(g, h), G.inverse(g));
}

/// Closure of an existing subgroup together with extra generators.
///
/// `base` must already be a subgroup and `base_gens` must generate it.
inline ElementSet extend_subgroup(FiniteGroup const &G, ElementSet const &base,
                                  std::span<ElementIndex const> base_gens,
                                  std::span<ElementIndex const> extra)
{
  std::vector<ElementIndex> gens(base_gens.begin(), base_gens.end());
  gens.insert(gens.end(), extra.begin(), extra.end());

  ElementSet out = base;
  std::vector<ElementIndex> queue = base.members();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    ElementIndex x = queue[q];
    for (ElementIndex g : gens) {
      ElementIndex y = G.multiply(x, g);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

inline ElementSet generate(FiniteGroup const &G, std::span<ElementIndex const> gens)
{
  ElementSet trivial(G.order());
  trivial.insert(FiniteGroup::identity());
  return extend_subgroup(G, trivial, {}, gens);
}

inline ElementSet whole_set(FiniteGroup const &G)
{
  ElementSet all(G.order());
  for (std::size_t i = 0; i < G.order(); ++i)
    all.insert(static_cast<ElementIndex>(i));
  return all;
}

} // namespace latticelab

#endif // LATTICELAB_GROUP_HPP
