#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace latticelab;

namespace {

std::vector<std::pair<FiniteGroup, FiniteGroup>> coprime_pairs()
{
  return {
    {cyclic(2), cyclic(3)},         {alternating(4), cyclic(5)},   {symmetric(3), cyclic(5)},
    {dicyclic(8), cyclic(3)},       {dihedral(4), cyclic(9)},      {abelian({2, 2}), cyclic(7)},
    {dihedral(5), cyclic(3)},       {abelian({3, 3}), dicyclic(8)}, {sl2(3), cyclic(5)},
    {abelian({2, 2, 2}), cyclic(3)}, {dihedral(7), abelian({3, 3})}, {cyclic(16), cyclic(9)},
  };
}

/// Smallest k with p^k = n, or 0 if n is not a power of p.
std::size_t exponent_of(std::size_t n, std::size_t p)
{
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : 0;
}

} // namespace

TEST(Multiplicativity, CoprimeDirectProducts)
{
  auto pairs = coprime_pairs();
  ASSERT_GE(pairs.size(), 10u);
  for (auto const &[A, B] : pairs) {
    SCOPED_TRACE(A.label() + " x " + B.label());
    ASSERT_EQ(std::gcd(A.order(), B.order()), 1u);
    EXPECT_EQ(sub_count(direct_product(A, B)), sub_count(A) * sub_count(B));
  }
}

TEST(Multiplicativity, FailsWithoutCoprimality)
{
  // C2 x C2 has 5 subgroups, not 2 * 2
  EXPECT_EQ(sub_count(direct_product(cyclic(2), cyclic(2))), 5u);
}

TEST(NormalInequality, EveryNormalSubgroupUpTo120)
{
  std::size_t checked = 0;
  for (auto const &G : fixtures::bundled_groups()) {
    if (G.order() > 120)
      continue;
    SCOPED_TRACE(G.label());
    auto L = all_subgroups(G);
    for (std::size_t i : L.normal_indices()) {
      auto Q = quotient(G, L[i]);
      EXPECT_EQ(G.order(), L[i].order * Q.order());
      auto N = close_generators(
        [&] {
          std::vector<Permutation> gens;
          L[i].members.for_each([&](ElementIndex x) { gens.push_back(G.element(x)); });
          return gens;
        }(),
        kDefaultCap);
      EXPECT_GE(L.count() + 1, sub_count(N) + sub_count(Q)) << "normal subgroup " << i;
      ++checked;
    }
  }
  EXPECT_GE(checked, 100u);
}

TEST(PGroupBound, NonCyclicBundledPGroups)
{
  std::size_t checked = 0;
  for (auto const &G : fixtures::bundled_groups()) {
    if (G.order() < 4 || !is_prime_power(G.order()) || is_cyclic(G))
      continue;
    std::size_t p = prime_factors(G.order()).front();
    std::size_t k = exponent_of(G.order(), p);
    std::size_t bound = (p == 2 && k == 3) ? 6 : (k - 1) * p + (k + 1);
    EXPECT_GE(sub_count(G), bound) << G.label() << " p=" << p << " k=" << k;
    ++checked;
  }
  EXPECT_GE(checked, 15u);
  // the exception is attained by Q8
  EXPECT_EQ(sub_count(dicyclic(8)), 6u);
}

TEST(ImplicationChain, ConstructorFamilies)
{
  for (auto G : {cyclic(30), abelian({4, 4}), dicyclic(16), dihedral(9), alternating(4), sl2(3),
                 symmetric(4), alternating(5), sl2(5), direct_product(symmetric(3), dicyclic(8))}) {
    SCOPED_TRACE(G.label());
    auto r = report(G);
    EXPECT_TRUE(!r.is_cyclic || r.is_abelian);
    EXPECT_TRUE(!r.is_abelian || r.is_nilpotent);
    EXPECT_TRUE(!r.is_nilpotent || r.is_supersolvable);
    EXPECT_TRUE(!r.is_supersolvable || r.is_solvable);
    EXPECT_TRUE(!r.is_perfect || G.order() == 1 || !r.is_solvable);
    if (r.is_nilpotent) {
      EXPECT_TRUE(r.is_lagrangian);
    }
  }
}

TEST(Lagrange, SubgroupOrdersDivideOnEveryBundledGroup)
{
  for (auto const &G : fixtures::bundled_groups()) {
    auto L = all_subgroups(G);
    for (auto const &H : L.subgroups())
      EXPECT_EQ(G.order() % H.order, 0u) << G.label();
  }
}
