#ifndef LATTICELAB_CONSTRUCTORS_HPP
#define LATTICELAB_CONSTRUCTORS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"

namespace latticelab {

namespace detail {

inline void check_cap(std::size_t order, std::size_t cap)
{
  if (order > cap)
    throw ClosureExceedsCap(cap);
}

/// Left-regular representation of a group given by a product on 0..n-1.
inline FiniteGroup regular_group(std::size_t n, std::vector<std::size_t> const &gens,
                                 std::function<std::size_t(std::size_t, std::size_t)> const &mul,
                                 std::size_t cap, std::string label)
{
  std::vector<Permutation> perms;
  for (std::size_t g : gens) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = static_cast<Point>(mul(g, x));
    perms.emplace_back(std::move(images));
  }
  return close_generators(perms, cap, std::move(label));
}

inline Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t length)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[offset + i] = static_cast<Point>(offset + (i + 1) % length);
  return Permutation(std::move(images));
}

} // namespace detail

inline FiniteGroup cyclic(std::size_t n, std::size_t cap = kDefaultCap)
{
  if (n == 0)
    throw InvalidArgument("cyclic group order must be at least 1");
  detail::check_cap(n, cap);
  std::vector<Permutation> gens{detail::cycle_on(n, 0, n)};
  return close_generators(gens, cap, "C" + std::to_string(n));
}

/// Direct product of cyclic groups acting on disjoint blocks of points.
inline FiniteGroup abelian(std::vector<std::size_t> const &factors, std::size_t cap = kDefaultCap)
{
  std::size_t order = 1, degree = 0;
  std::string label;
  for (std::size_t f : factors) {
    if (f == 0)
      throw InvalidArgument("cyclic factor must be at least 1");
    order *= f;
    detail::check_cap(order, cap);
    degree += f;
    label += (label.empty() ? "C" : " x C") + std::to_string(f);
  }
  if (degree == 0)
    return cyclic(1, cap);

  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (std::size_t f : factors) {
    gens.push_back(detail::cycle_on(degree, offset, f));
    offset += f;
  }
  return close_generators(gens, cap, label);
}

/// Dihedral group of order 2n (D_n is the symmetry group of the n-gon).
inline FiniteGroup dihedral(std::size_t n, std::size_t cap = kDefaultCap)
{
  if (n < 2)
    throw InvalidArgument("dihedral D_n needs n >= 2");
  detail::check_cap(2 * n, cap);
  if (n == 2) {
    // The 2-gon action is not faithful; use the Klein four group on 4 points.
    auto G = abelian({2, 2}, cap);
    G.set_label("D2");
    return G;
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<Point>((n - i) % n);
  std::vector<Permutation> gens{detail::cycle_on(n, 0, n), Permutation(std::move(reflection))};
  return close_generators(gens, cap, "D" + std::to_string(n));
}

/// Dicyclic group of order n = 4m: <a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>.
inline FiniteGroup dicyclic(std::size_t n, std::size_t cap = kDefaultCap)
{
  if (n < 8 || n % 4 != 0)
    throw InvalidArgument("dicyclic order must be a multiple of 4 and at least 8");
  detail::check_cap(n, cap);
  std::size_t m = n / 4, r = 2 * m;
  // element a^k x^j has index k + r*j
  auto mul = [m, r](std::size_t u, std::size_t v) -> std::size_t {
    std::size_t k1 = u % r, j1 = u / r, k2 = v % r, j2 = v / r;
    if (j1 == 0)
      return (k1 + k2) % r + r * j2;
    if (j2 == 0)
      return (k1 + r - k2) % r + r;
    return (k1 + r - k2 + m) % r;
  };
  return detail::regular_group(n, {1, r}, mul, cap, "Dic" + std::to_string(n));
}

inline std::size_t factorial(std::size_t n)
{
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

inline FiniteGroup symmetric(std::size_t n, std::size_t cap = kDefaultCap)
{
  if (n == 0)
    throw InvalidArgument("symmetric group needs n >= 1");
  if (n > 12)
    throw ClosureExceedsCap(cap);
  detail::check_cap(factorial(n), cap);
  if (n == 1)
    return close_generators({Permutation::identity(1)}, cap, "S1");
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}}), detail::cycle_on(n, 0, n)};
  return close_generators(gens, cap, "S" + std::to_string(n));
}

inline FiniteGroup alternating(std::size_t n, std::size_t cap = kDefaultCap)
{
  if (n == 0)
    throw InvalidArgument("alternating group needs n >= 1");
  if (n > 12)
    throw ClosureExceedsCap(cap);
  detail::check_cap(n < 2 ? 1 : factorial(n) / 2, cap);
  if (n < 3)
    return close_generators({Permutation::identity(n)}, cap, "A" + std::to_string(n));
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    // an odd-length cycle through all points (n odd) or all but point 0 (n even)
    std::size_t start = (n % 2 == 1) ? 0 : 1;
    gens.insert(gens.begin(), detail::cycle_on(n, start, n - start));
  }
  return close_generators(gens, cap, "A" + std::to_string(n));
}

/// SL(2,p) acting on the p^2-1 nonzero vectors of the plane over F_p.
inline FiniteGroup sl2(std::size_t p, std::size_t cap = kDefaultCap)
{
  if (!is_prime(p))
    throw InvalidArgument("SL(2,p) needs a prime p, got " + std::to_string(p));
  std::size_t order = p * (p * p - 1);
  detail::check_cap(order, cap);

  using Matrix = std::array<std::size_t, 4>;
  std::size_t count = 0;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d)
          if ((a * d + p * p - (b * c) % p) % p == 1)
            ++count;

  // vector (x, y) has index x + p*y - 1
  auto act = [p](Matrix const &m) {
    std::vector<Point> images(p * p - 1);
    for (std::size_t y = 0; y < p; ++y) {
      for (std::size_t x = 0; x < p; ++x) {
        if (x == 0 && y == 0)
          continue;
        std::size_t nx = (m[0] * x + m[1] * y) % p;
        std::size_t ny = (m[2] * x + m[3] * y) % p;
        images[x + p * y - 1] = static_cast<Point>(nx + p * ny - 1);
      }
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens{act({1, 1, 0, 1}), act({0, p - 1, 1, 0})};
  auto G = close_generators(gens, cap, "SL(2," + std::to_string(p) + ")");
  if (G.order() != count || count != order)
    throw Error("SL(2," + std::to_string(p) + ") generators do not close to the matrix group");
  return G;
}

/// A on the first points, B on the following ones.
inline FiniteGroup direct_product(FiniteGroup const &A, FiniteGroup const &B,
                                  std::size_t cap = kDefaultCap)
{
  detail::check_cap(A.order() * B.order(), cap);
  std::size_t da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (auto const &g : A.generator_permutations()) {
    std::vector<Point> images(da + db);
    for (std::size_t x = 0; x < da; ++x)
      images[x] = g[static_cast<Point>(x)];
    for (std::size_t x = 0; x < db; ++x)
      images[da + x] = static_cast<Point>(da + x);
    gens.emplace_back(std::move(images));
  }
  for (auto const &g : B.generator_permutations()) {
    std::vector<Point> images(da + db);
    for (std::size_t x = 0; x < da; ++x)
      images[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < db; ++x)
      images[da + x] = static_cast<Point>(da + g[static_cast<Point>(x)]);
    gens.emplace_back(std::move(images));
  }
  return close_generators(gens, cap, A.label() + " x " + B.label());
}

/// Product of generator powers; `generator` indexes the owning group's generator list.
struct WordFactor
{
  std::size_t generator = 0;
  long exponent = 1;

  friend bool operator==(WordFactor const &, WordFactor const &) = default;
};

using Word = std::vector<WordFactor>;

/// images[k][j] is the image of generator j of N under the automorphism
/// assigned to generator k of H. Missing rows act trivially.
struct ActionSpec
{
  std::vector<std::vector<Word>> images;
};

inline ElementIndex evaluate_word(FiniteGroup const &G, Word const &word)
{
  ElementIndex x = FiniteGroup::identity();
  for (auto const &f : word) {
    if (f.generator >= G.generators().size())
      throw InvalidArgument("word uses generator " + std::to_string(f.generator) +
                            " but the group has " + std::to_string(G.generators().size()));
    ElementIndex g = G.generators()[f.generator];
    if (f.exponent < 0)
      g = G.inverse(g);
    long e = f.exponent < 0 ? -f.exponent : f.exponent;
    for (long k = 0; k < e; ++k)
      x = G.multiply(x, g);
  }
  return x;
}

/// Extends generator images to a map on all of N; throws unless it is an automorphism.
inline std::vector<ElementIndex> automorphism_from_images(FiniteGroup const &N,
                                                          std::vector<ElementIndex> const &images)
{
  constexpr ElementIndex unset = ~ElementIndex{0};
  std::vector<ElementIndex> phi(N.order(), unset);
  phi[0] = 0;
  std::vector<ElementIndex> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    ElementIndex x = queue[q];
    for (std::size_t j = 0; j < N.generators().size(); ++j) {
      ElementIndex y = N.multiply(x, N.generators()[j]);
      ElementIndex val = N.multiply(phi[x], images[j]);
      if (phi[y] == unset) {
        phi[y] = val;
        queue.push_back(y);
      } else if (phi[y] != val) {
        throw NotAnAutomorphism("generator images do not extend to a homomorphism of " +
                                N.label());
      }
    }
  }
  std::vector<bool> hit(N.order(), false);
  for (ElementIndex v : phi) {
    if (hit[v])
      throw NotAnAutomorphism("generator images do not define a bijection of " + N.label());
    hit[v] = true;
  }
  return phi;
}

/// N x| H realized by the left-regular action on the |N||H| pairs (n, h).
inline FiniteGroup semidirect_product(FiniteGroup const &N, FiniteGroup const &H,
                                      ActionSpec const &act, std::size_t cap = kDefaultCap)
{
  detail::check_cap(N.order() * H.order(), cap);
  if (act.images.size() > H.generators().size())
    throw InvalidArgument("action assigns more automorphisms than H has generators");

  std::vector<std::vector<ElementIndex>> gen_autos;
  for (std::size_t k = 0; k < H.generators().size(); ++k) {
    std::vector<ElementIndex> images;
    for (std::size_t j = 0; j < N.generators().size(); ++j) {
      if (k < act.images.size() && j < act.images[k].size() && !act.images[k][j].empty())
        images.push_back(evaluate_word(N, act.images[k][j]));
      else if (k < act.images.size() && j < act.images[k].size())
        images.push_back(FiniteGroup::identity());
      else
        images.push_back(N.generators()[j]);
    }
    gen_autos.push_back(automorphism_from_images(N, images));
  }

  // action of every h in H, checked for consistency along every edge h -> h*g
  std::size_t nn = N.order(), nh = H.order();
  std::vector<std::vector<ElementIndex>> action(nh);
  action[0].resize(nn);
  std::iota(action[0].begin(), action[0].end(), ElementIndex{0});
  std::vector<ElementIndex> queue{0};
  std::vector<bool> done(nh, false);
  done[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    ElementIndex h = queue[q];
    for (std::size_t k = 0; k < H.generators().size(); ++k) {
      ElementIndex y = H.multiply(h, H.generators()[k]);
      std::vector<ElementIndex> val(nn);
      for (std::size_t x = 0; x < nn; ++x)
        val[x] = action[h][gen_autos[k][x]];
      if (!done[y]) {
        done[y] = true;
        action[y] = std::move(val);
        queue.push_back(y);
      } else if (action[y] != val) {
        throw NotAHomomorphism("assigned automorphisms violate the relations of " + H.label());
      }
    }
  }

  // pair (n, h) has index n + |N| h; (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2)
  auto mul = [&](std::size_t u, std::size_t v) -> std::size_t {
    std::size_t n1 = u % nn, h1 = u / nn, n2 = v % nn, h2 = v / nn;
    std::size_t n = N.multiply(static_cast<ElementIndex>(n1), action[h1][n2]);
    std::size_t h = H.multiply(static_cast<ElementIndex>(h1), static_cast<ElementIndex>(h2));
    return n + nn * h;
  };
  std::vector<std::size_t> gens;
  for (ElementIndex g : N.generators())
    gens.push_back(g);
  for (ElementIndex g : H.generators())
    gens.push_back(static_cast<std::size_t>(g) * nn);
  return detail::regular_group(nn * nh, gens, mul, cap,
                               "sd(" + N.label() + ", " + H.label() + ")");
}

/// G/N acting on the left cosets of N, cosets numbered by their least element index.
inline FiniteGroup quotient(FiniteGroup const &G, Subgroup const &N, std::size_t cap = kDefaultCap)
{
  if (!is_normal(G, N))
    throw NotNormal();

  std::vector<std::size_t> coset_of(G.order(), ~std::size_t{0});
  std::vector<ElementIndex> reps;
  auto members = N.members.members();
  for (ElementIndex x = 0; x < G.order(); ++x) {
    if (coset_of[x] != ~std::size_t{0})
      continue;
    std::size_t c = reps.size();
    reps.push_back(x);
    for (ElementIndex n : members)
      coset_of[G.multiply(x, n)] = c;
  }

  std::size_t degree = reps.size();
  std::vector<Permutation> gens;
  for (ElementIndex g : G.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = static_cast<Point>(coset_of[G.multiply(g, reps[c])]);
    gens.emplace_back(std::move(images));
  }
  return close_generators(gens, cap, G.label() + "/N" + std::to_string(N.order));
}

} // namespace latticelab

#endif // LATTICELAB_CONSTRUCTORS_HPP
