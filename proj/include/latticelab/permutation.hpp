#ifndef LATTICELAB_PERMUTATION_HPP
#define LATTICELAB_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace latticelab {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image list.
class Permutation
{
public:
  Permutation() : images_{0} {}

  explicit Permutation(std::vector<Point> images) : images_(std::move(images))
  {
    if (images_.empty())
      throw InvalidPermutation("permutation degree must be at least 1");

    std::vector<bool> hit(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || hit[x])
        throw InvalidPermutation("image list is not a bijection");
      hit[x] = true;
    }
  }

  static Permutation identity(std::size_t degree)
  {
    if (degree == 0)
      throw InvalidPermutation("permutation degree must be at least 1");
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<Point>(i);
    return Permutation(std::move(images), Unchecked{});
  }

  /// Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles)
  {
    std::vector<Point> images = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (auto const &cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point x = cycle[i];
        if (x >= degree)
          throw InvalidPermutation("cycle point " + std::to_string(x + 1) +
                                   " exceeds degree " + std::to_string(degree));
        if (used[x])
          throw InvalidPermutation("cycles are not disjoint at point " +
                                   std::to_string(x + 1));
        used[x] = true;
        images[x] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t degree() const { return images_.size(); }

  Point operator[](Point x) const { return images_[x]; }

  std::span<Point const> images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i)
        return false;
    }
    return true;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};

  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(Permutation const &a, Permutation const &b);
  friend Permutation inverse(Permutation const &a);

  std::vector<Point> images_;
};

/// Returns the permutation x -> a(b(x)).
inline Permutation compose(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());

  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = a.images_[b.images_[x]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

inline Permutation inverse(Permutation const &a)
{
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[a.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

/// Hash over the image list; equal permutations hash equally.
inline std::size_t hash_images(std::span<Point const> images)
{
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const { return hash_images(p.images()); }
};

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)"; "()" is the identity.
///
/// Whitespace is ignored and fixed points may be omitted. A degree of 0 means
/// "the largest point mentioned" (at least 1).
inline Permutation parse_cycles(std::string_view text, std::size_t degree = 0)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;

  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                               text[i] == '\n'))
      ++i;
  };
  auto fail = [&](std::string const &what) -> Permutation {
    throw InvalidPermutation("bad cycle notation at offset " + std::to_string(i) + ": " + what);
  };

  skip_ws();
  if (i == text.size())
    fail("empty input");

  while (true) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      return fail("expected '('");
    ++i;

    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffull)
          return fail("point out of range");
        ++i;
      }
      if (i == start)
        return fail("expected a point");
      if (value == 0)
        return fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
      max_point = std::max<std::size_t>(max_point, value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      return fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
  }

  if (degree == 0)
    degree = std::max<std::size_t>(max_point, 1);
  else if (max_point > degree)
    throw InvalidPermutation("point " + std::to_string(max_point) + " exceeds degree " +
                             std::to_string(degree));
  return Permutation::from_cycles(degree, cycles);
}

/// Formats as 1-based disjoint cycles, each starting at its least point.
inline std::string to_cycles(Permutation const &p)
{
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    Point x = start;
    bool first = true;
    do {
      if (!first)
        out += ',';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = p[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace latticelab

template<>
struct std::hash<latticelab::Permutation>
{
  std::size_t operator()(latticelab::Permutation const &p) const
  {
    return latticelab::hash_images(p.images());
  }
};

#endif // LATTICELAB_PERMUTATION_HPP
