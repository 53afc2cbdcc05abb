#include <gtest/gtest.h>

#include "arboreal/constructions.hpp"
#include "arboreal/error.hpp"
#include "arboreal/oracle.hpp"

using namespace arboreal;

namespace {

ProductConfig default_product()
{
  return ProductConfig{{{3, 5, 5}, {7, 11, 13}}, 2};
}

WreathConfig cyclic_config(std::uint32_t k, std::size_t d)
{
  WreathConfig cfg;
  cfg.index = SphericalIndex(std::vector<std::uint32_t>(d, k));
  cfg.groups.assign(d, PermGroup::cyclic(k));
  return cfg;
}

PathPrefix zeros(std::size_t d)
{
  return PathPrefix{std::vector<Point>(d, 0)};
}

std::size_t cycle_length(Perm const &g)
{
  auto const cs = g.cycles();
  return cs.size() == 1 ? cs.front().size() : 0;
}

} // namespace

TEST(ConstructionsTest, ValidatePoChecksEveryRule)
{
  EXPECT_TRUE(validate_po(default_product()).valid);
  EXPECT_FALSE(validate_po(ProductConfig{{{3, 9, 9}}, 1}).valid);     // 9 not prime
  EXPECT_FALSE(validate_po(ProductConfig{{{2, 5, 5}}, 1}).valid);     // 2 not odd
  EXPECT_FALSE(validate_po(ProductConfig{{{3, 5, 8}}, 1}).valid);     // o = p1 + p2
  EXPECT_FALSE(validate_po(ProductConfig{{{3, 7, 5}}, 1}).valid);     // p2 > o
  EXPECT_FALSE(validate_po(ProductConfig{{{3, 5, 5}, {3, 7, 7}}, 2}).valid);  // 3 reused
  EXPECT_FALSE(validate_po(ProductConfig{{{3, 5, 5}}, 2}).valid);     // depth too large
  EXPECT_FALSE(validate_po(ProductConfig{}).valid);
}

TEST(ConstructionsTest, NamedGroups)
{
  EXPECT_EQ(5, named_group("C5", 5).order());
  EXPECT_EQ(60, named_group("A5", 5).order());
  EXPECT_EQ(60, named_group("Alt5", 5).order());
  EXPECT_EQ(24, named_group("S4", 4).order());
  EXPECT_THROW(named_group("C5", 4), ArgumentError);
  EXPECT_THROW(named_group("Q8", 8), ArgumentError);
  EXPECT_THROW(named_group("A", 5), ArgumentError);
}

TEST(ConstructionsTest, CyclePairsGenerateTheAlternatingGroup)
{
  for (auto [l1, l2, n] : std::vector<std::tuple<int, int, int>>{{3, 5, 5}, {3, 5, 7}, {5, 7, 7}}) {
    auto const [s1, s2] = cycle_pair_generators(l1, l2, n);
    EXPECT_EQ(std::size_t(l1), cycle_length(s1));
    EXPECT_EQ(std::size_t(l2), cycle_length(s2));
    std::vector<Perm> const gens{s1, s2};
    EnumeratedGroup const E(n, gens);
    EXPECT_EQ(factorial(n) / 2, BigInt(E.order())) << l1 << "," << l2 << "," << n;
  }
  auto const [a, b] = cycle_pair_generators(7, 11, 13);
  EXPECT_EQ(factorial(13) / 2, PermGroup(13, {a, b}).order());
  EXPECT_THROW(cycle_pair_generators(4, 5, 5), ArgumentError);
  EXPECT_THROW(cycle_pair_generators(3, 5, 8), ArgumentError);
}

TEST(ConstructionsTest, CrtExponentsByHand)
{
  auto const cfg = default_product();
  // primes (3,7) for a = 1 and (5,11) for a = 2
  EXPECT_EQ(7, crt_exponent(cfg, 1, 1));
  EXPECT_EQ(15, crt_exponent(cfg, 1, 2));
  EXPECT_EQ(11, crt_exponent(cfg, 2, 1));
  EXPECT_EQ(45, crt_exponent(cfg, 2, 2));
  EXPECT_THROW(crt_exponent(cfg, 3, 1), ArgumentError);
  EXPECT_THROW(crt_exponent(cfg, 1, 3), ArgumentError);
}

TEST(ConstructionsTest, ProductSystemOrders)
{
  auto const sys = build_alternating_product(default_product());
  EXPECT_EQ(60, sys.level_group(1).order());
  EXPECT_EQ(BigInt(60) * (factorial(13) / 2), sys.level_group(2).order());
  auto const x = zeros(2);
  for (std::size_t n = 0; n <= 2; ++n)
    EXPECT_EQ(product_K_structural_count(default_product(), n), stabilizer_K(sys, x, n).order());
}

TEST(ConstructionsTest, WreathOrdersAndFormula)
{
  auto const cfg = cyclic_config(2, 4);
  EXPECT_EQ(32768, wreath_order(cfg));
  EXPECT_EQ(32768, build_wreath(cfg).tree_group().order());
  WreathConfig alt;
  alt.index = SphericalIndex({5, 5});
  alt.groups = {PermGroup::alternating(5), PermGroup::alternating(5)};
  EXPECT_EQ(BigInt(60) * pow_big(60, 5), build_wreath(alt).tree_group().order());
  // S_0 at depth 2: stabilizer of x_1 in A5, times A5 on the 4 residual level-1 vertices
  EXPECT_EQ(BigInt(12) * pow_big(60, 4), expected_S_order(alt, zeros(2), 0, 2));
}

TEST(ConstructionsTest, WreathRejectsIntransitiveLevels)
{
  WreathConfig cfg;
  cfg.index = SphericalIndex({3});
  cfg.groups = {PermGroup(3, {Perm::from_cycles(3, {{0, 1}})})};
  EXPECT_THROW(build_wreath(cfg), ArgumentError);
}

TEST(ConstructionsTest, PrimeScheme)
{
  auto const one = prime_scheme(1);
  ASSERT_EQ(1u, one.levels.size());
  EXPECT_EQ(3u, one.levels[0].p1);
  EXPECT_EQ(5u, one.levels[0].p2);
  EXPECT_EQ(7u, one.levels[0].o);
  auto const two = prime_scheme(2);
  EXPECT_EQ(7u, two.levels[1].p1);
  EXPECT_EQ(11u, two.levels[1].p2);
  EXPECT_EQ(17u, two.levels[1].o);
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_TRUE(validate_po(prime_scheme(n)).valid);
  EXPECT_THROW(prime_scheme(0), ArgumentError);
}

TEST(ConstructionsTest, ProductActionMultipliesOrders)
{
  auto const H = build_odometer(2, 3);
  auto const G = build_wreath(cyclic_config(3, 2));
  auto const P = build_product_action(H, G);
  EXPECT_EQ(3u, P.depth());
  for (std::size_t n = 0; n <= 2; ++n)
    EXPECT_EQ(H.level_group(n).order() * G.level_group(n).order(), P.level_group(n).order());
  auto const xy = product_path(H, G, zeros(3), PathPrefix{{1, 2}});
  EXPECT_EQ((std::vector<Point>{1, 2, 0}), xy.digits);
  EXPECT_EQ(discriminant_truncation(H, zeros(3)).order() *
                discriminant_truncation(G, PathPrefix{{1, 2}}).order(),
            discriminant_truncation(P, xy).order());
}

TEST(ConstructionsTest, ProductWitnessIsVerified)
{
  auto const H = build_odometer(2, 5);
  auto const G = build_wreath(cyclic_config(2, 5));
  auto const w = product_proper_containment_witness(H, G, zeros(5), zeros(5), 1);
  EXPECT_TRUE(w.verified());
  EXPECT_FALSE(w.g_hat.is_identity());
  EXPECT_EQ(w.k_h * w.k_g, w.k_product);

  // trivial first factor still yields a witness
  SphericalIndex const tiny({2, 2, 2, 2, 2});
  LevelGroupSystem const trivial(tiny, {});
  EXPECT_TRUE(product_proper_containment_witness(trivial, G, zeros(5), zeros(5), 1).verified());

  // a regular second factor has trivial K_n
  EXPECT_THROW(product_proper_containment_witness(G, H, zeros(5), zeros(5), 1), ArgumentError);
}
