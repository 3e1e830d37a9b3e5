#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace latticelab;

namespace {

ActionSpec power_action(long k)
{
  ActionSpec act;
  act.images.push_back({Word{WordFactor{0, k}}});
  return act;
}

std::size_t involutions(FiniteGroup const &G)
{
  std::size_t count = 0;
  for (ElementIndex x = 0; x < G.order(); ++x)
    count += element_order(G, x) == 2;
  return count;
}

} // namespace

TEST(Cyclic, SubCounts)
{
  EXPECT_EQ(sub_count(cyclic(1)), 1u);
  EXPECT_EQ(sub_count(cyclic(4)), 3u);
  EXPECT_EQ(sub_count(cyclic(6)), 4u);
  EXPECT_EQ(cyclic(12).degree(), 12u);
  EXPECT_THROW(cyclic(0), InvalidArgument);
  EXPECT_THROW(cyclic(6000), ClosureExceedsCap);
}

TEST(Abelian, SubCounts)
{
  EXPECT_EQ(sub_count(abelian({2, 2})), 5u);
  EXPECT_EQ(sub_count(abelian({4, 2})), 8u);
  EXPECT_EQ(sub_count(abelian({9, 3})), 10u);
  EXPECT_EQ(abelian({4, 2}).degree(), 6u);
  EXPECT_THROW(abelian({100, 100}), ClosureExceedsCap);
}

TEST(Dihedral, OrderIsTwiceTheSubscript)
{
  EXPECT_EQ(dihedral(5).order(), 10u);
  EXPECT_EQ(sub_count(dihedral(5)), 8u);
  EXPECT_EQ(sub_count(dihedral(4)), 10u);
  EXPECT_EQ(sub_count(dihedral(7)), 10u);
  EXPECT_EQ(dihedral(2).order(), 4u);
  EXPECT_THROW(dihedral(1), InvalidArgument);
}

TEST(Dicyclic, SubscriptIsTheOrder)
{
  EXPECT_EQ(dicyclic(8).order(), 8u);
  EXPECT_EQ(sub_count(dicyclic(8)), 6u);
  EXPECT_EQ(sub_count(dicyclic(12)), 8u);
  EXPECT_EQ(sub_count(dicyclic(16)), 11u);
  EXPECT_THROW(dicyclic(6), InvalidArgument);
  EXPECT_THROW(dicyclic(4), InvalidArgument);
}

TEST(Dicyclic, ExactlyOneInvolution)
{
  for (std::size_t n : {8, 12, 16, 20, 24, 32, 48})
    EXPECT_EQ(involutions(dicyclic(n)), 1u) << n;
}

TEST(SymmetricAlternating, Examples)
{
  EXPECT_EQ(sub_count(symmetric(3)), 6u);
  EXPECT_EQ(sub_count(alternating(4)), 10u);
  EXPECT_EQ(sub_count(alternating(5)), 59u);
  EXPECT_EQ(alternating(6).order(), 360u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(symmetric(1).order(), 1u);
  EXPECT_THROW(symmetric(8), ClosureExceedsCap);
}

TEST(SL2, Examples)
{
  auto G3 = sl2(3);
  EXPECT_EQ(G3.order(), 24u);
  EXPECT_EQ(G3.degree(), 8u);
  EXPECT_EQ(sub_count(G3), 15u);
  auto G5 = sl2(5);
  EXPECT_EQ(G5.order(), 120u);
  EXPECT_EQ(sub_count(G5), 76u);
  EXPECT_EQ(sl2(2).order(), 6u);
  EXPECT_THROW(sl2(4), InvalidArgument);
  EXPECT_THROW(sl2(5, 100), ClosureExceedsCap);
}

TEST(DirectProduct, Examples)
{
  auto Z6 = direct_product(cyclic(2), cyclic(3));
  EXPECT_EQ(Z6.order(), 6u);
  EXPECT_EQ(sub_count(Z6), 4u);
  EXPECT_EQ(sub_count(direct_product(alternating(4), cyclic(5))), 20u);
  auto S4 = symmetric(4);
  EXPECT_EQ(sub_count(direct_product(S4, cyclic(1))), sub_count(S4));
  EXPECT_THROW(direct_product(alternating(5), alternating(5), 1000), ClosureExceedsCap);
}

TEST(Semidirect, TableEntries)
{
  auto G = semidirect_product(cyclic(7), cyclic(3), power_action(2));
  EXPECT_EQ(G.order(), 21u);
  EXPECT_EQ(sub_count(G), 10u);
  auto H = semidirect_product(cyclic(3), cyclic(8), power_action(-1));
  EXPECT_EQ(H.order(), 24u);
  EXPECT_EQ(sub_count(H), 10u);
  auto M = semidirect_product(cyclic(8), cyclic(2), power_action(5));
  EXPECT_EQ(sub_count(M), 11u);
}

TEST(Semidirect, TrivialActionMatchesDirectProduct)
{
  std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs;
  pairs.emplace_back(cyclic(4), cyclic(2));
  pairs.emplace_back(symmetric(3), cyclic(4));
  pairs.emplace_back(abelian({2, 2}), dihedral(3));
  for (auto const &[N, H] : pairs) {
    auto sd = semidirect_product(N, H, ActionSpec{});
    EXPECT_EQ(sd.order(), N.order() * H.order());
    EXPECT_EQ(sub_count(sd), sub_count(direct_product(N, H)));
  }
}

TEST(Semidirect, RejectsBadActions)
{
  // a -> a^3 on C6 is not injective
  EXPECT_THROW(semidirect_product(cyclic(6), cyclic(2), power_action(3)), NotAnAutomorphism);
  // a -> a^2 on C7 has order 3, so C2 cannot act that way
  EXPECT_THROW(semidirect_product(cyclic(7), cyclic(2), power_action(2)), NotAHomomorphism);
  // swapping the factors of C4 x C2 is not a homomorphism
  ActionSpec swap;
  swap.images.push_back({Word{WordFactor{1, 1}}, Word{WordFactor{0, 1}}});
  EXPECT_THROW(semidirect_product(abelian({4, 2}), cyclic(2), swap), NotAnAutomorphism);
  EXPECT_THROW(semidirect_product(cyclic(50), cyclic(50), ActionSpec{}, 1000), ClosureExceedsCap);
}

TEST(Quotient, Examples)
{
  auto Q8 = dicyclic(8);
  auto L = all_subgroups(Q8);
  auto center = L[1]; // the unique subgroup of order 2
  ASSERT_EQ(center.order, 2u);
  auto V = quotient(Q8, center);
  EXPECT_EQ(V.order(), 4u);
  EXPECT_EQ(sub_count(V), 5u);

  auto S = sl2(3);
  auto LS = all_subgroups(S);
  ASSERT_EQ(LS[1].order, 2u);
  EXPECT_TRUE(LS.is_normal(1));
  auto A = quotient(S, LS[1]);
  EXPECT_EQ(A.order(), 12u);
  EXPECT_EQ(sub_count(A), 10u);

  auto S4 = symmetric(4);
  EXPECT_EQ(sub_count(quotient(S4, trivial_subgroup(S4))), sub_count(S4));
}

TEST(Quotient, RejectsNonNormal)
{
  auto S3 = symmetric(3);
  auto L = all_subgroups(S3);
  ASSERT_EQ(L[1].order, 2u);
  EXPECT_THROW(quotient(S3, L[1]), NotNormal);
}
