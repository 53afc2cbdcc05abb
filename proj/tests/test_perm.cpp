#include <gtest/gtest.h>

#include <set>

#include "arboreal/error.hpp"
#include "arboreal/perm.hpp"

using namespace arboreal;

TEST(PermTest, ComposesRightFactorFirst)
{
  Perm const g = Perm::from_cycles(3, {{0, 1}});
  Perm const h = Perm::from_cycles(3, {{1, 2}});
  Perm const gh = g * h;
  for (Point p = 0; p < 3; ++p)
    EXPECT_EQ(g(h(p)), gh(p));
  EXPECT_EQ(Perm({1, 2, 0}), gh);
  EXPECT_NE(gh, h * g);
}

TEST(PermTest, RejectsNonBijections)
{
  EXPECT_THROW(Perm({0, 0, 1}), ArgumentError);
  EXPECT_THROW(Perm({0, 3, 1}), ArgumentError);
  EXPECT_THROW(Perm(3) * Perm(4), ArgumentError);
}

TEST(PermTest, ParsesBothNotations)
{
  EXPECT_EQ(Perm({1, 2, 0, 4, 3}), Perm::parse("(0 1 2)(3 4)", 5));
  EXPECT_EQ(Perm({2, 0, 1}), Perm::parse("[2,0,1]"));
  EXPECT_EQ(Perm(4), Perm::parse("()", 4));
  EXPECT_THROW(Perm::parse("(0 1", 3), ArgumentError);
  EXPECT_THROW(Perm::parse("(0 5)", 3), ArgumentError);
}

TEST(PermTest, CycleStringRoundTrips)
{
  Perm const g = Perm::from_cycles(7, {{0, 3, 5}, {1, 6}});
  EXPECT_EQ("(0 3 5)(1 6)", g.cycle_str());
  EXPECT_EQ(g, Perm::parse(g.cycle_str(), 7));
  EXPECT_EQ(g, Perm::parse(g.str(), 7));
  EXPECT_EQ("()", Perm(4).cycle_str());
}

TEST(PermTest, InverseUndoes)
{
  Perm const g = Perm::from_cycles(6, {{0, 4, 2, 1}, {3, 5}});
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE((g.inverse() * g).is_identity());
  EXPECT_EQ(inverse(g), g.inverse());
}

TEST(PermTest, OrderIsLcmOfCycleLengths)
{
  Perm const g = Perm::from_cycles(9, {{0, 1, 2, 3}, {4, 5, 6}, {7, 8}});
  auto const op = order_and_parity(g);
  EXPECT_EQ(12, op.order);
  // 3 + 2 + 1 transpositions
  EXPECT_EQ(Parity::even, op.parity);
  EXPECT_EQ(Parity::odd, order_and_parity(Perm::from_cycles(4, {{0, 1}})).parity);

  // order by repeated multiplication
  Perm p = g;
  int k = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++k;
  }
  EXPECT_EQ(12, k);
}

TEST(PermTest, PowersAgreeForSmallAndBigExponents)
{
  Perm const g = Perm::from_cycles(8, {{0, 1, 2, 3, 4}, {5, 6, 7}});
  Perm acc(8);
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(acc, power(g, k));
    EXPECT_EQ(acc, power(g, BigInt(k)));
    acc = acc * g;
  }
  EXPECT_EQ(power(g, 7), power(g, BigInt(15) * 1000000007 + 7 - BigInt(15) * 1000000005));
  EXPECT_EQ(power(g, -1), g.inverse());
}

TEST(PermTest, SmallestMovedPoint)
{
  EXPECT_EQ(2u, Perm::from_cycles(5, {{2, 4}}).smallest_moved_point());
  EXPECT_EQ(5u, Perm(5).smallest_moved_point());
}

TEST(PermTest, CommutingDisjointCycles)
{
  Perm const a = Perm::from_cycles(6, {{0, 1, 2}});
  Perm const b = Perm::from_cycles(6, {{3, 4}});
  Perm const c = Perm::from_cycles(6, {{2, 3}});
  EXPECT_TRUE(commutes(a, b));
  EXPECT_FALSE(commutes(a, c));
}

TEST(PermTest, ProductPermActsCoordinatewise)
{
  Perm const g = Perm::from_cycles(3, {{0, 1, 2}});
  Perm const h = Perm::from_cycles(4, {{1, 3}});
  Perm const gh = product_perm(g, h);
  ASSERT_EQ(12u, gh.degree());
  for (Point a = 0; a < 3; ++a)
    for (Point b = 0; b < 4; ++b)
      EXPECT_EQ(g(a) * 4 + h(b), gh(a * 4 + b));
}

TEST(PermTest, NoncommutingWitnessFixesPointAndFailsToCommute)
{
  Perm const g = Perm::from_cycles(7, {{1, 2, 3}, {4, 5, 6}});
  Perm const tau = noncommuting_stabilizer_witness(7, g, 0);
  EXPECT_EQ(0u, tau(0));
  EXPECT_EQ(3u, order_and_parity(tau).order);
  EXPECT_FALSE(commutes(g, tau));
  EXPECT_THROW(noncommuting_stabilizer_witness(7, Perm(7), 0), ArgumentError);
}

TEST(PermTest, HashSeparatesDistinctPerms)
{
  std::set<std::size_t> hashes;
  std::hash<Perm> h;
  hashes.insert(h(Perm({0, 1, 2})));
  hashes.insert(h(Perm({1, 0, 2})));
  hashes.insert(h(Perm({2, 1, 0})));
  EXPECT_EQ(3u, hashes.size());
  EXPECT_EQ(h(Perm({1, 0, 2})), h(Perm::from_cycles(3, {{0, 1}})));
}
