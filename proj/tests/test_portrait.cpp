#include <gtest/gtest.h>

#include <random>

#include "arboreal/error.hpp"
#include "arboreal/portrait.hpp"

using namespace arboreal;

namespace {

Portrait random_portrait(SphericalIndex const &m, std::mt19937_64 &rng)
{
  std::vector<std::vector<Perm>> dec(m.depth());
  for (std::size_t i = 0; i < m.depth(); ++i) {
    for (std::uint64_t k = 0; k < level_size(m, i); ++k) {
      std::vector<Point> img(m.branching(i + 1));
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      dec[i].emplace_back(std::move(img));
    }
  }
  return Portrait(m, std::move(dec));
}

} // namespace

TEST(PortraitTest, IdentityActsTrivially)
{
  SphericalIndex const m({2, 3, 2});
  Portrait const id(m);
  EXPECT_TRUE(id.is_identity());
  for (auto const &v : level_vertices(m, 3))
    EXPECT_EQ(v, id.apply(v));
  EXPECT_TRUE(id.union_restriction().is_identity());
}

TEST(PortraitTest, ApplyFollowsDecorationsDownThePath)
{
  SphericalIndex const m({2, 2});
  Portrait const a =
      Portrait::single_vertex(m, VertexAddress{{1}}, Perm::from_cycles(2, {{0, 1}}));
  EXPECT_EQ((VertexAddress{{1, 1}}), a.apply(VertexAddress{{1, 0}}));
  EXPECT_EQ((VertexAddress{{0, 0}}), a.apply(VertexAddress{{0, 0}}));
  Portrait const b = Portrait::from_level_perms(m, {Perm::from_cycles(2, {{0, 1}}), Perm(2)});
  EXPECT_EQ((VertexAddress{{1, 0}}), b.apply(VertexAddress{{0, 0}}));
}

TEST(PortraitTest, CompositionMatchesActionOnEveryLevel)
{
  SphericalIndex const m({3, 2, 3});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Portrait const a = random_portrait(m, rng), b = random_portrait(m, rng);
    Portrait const ab = a * b;
    for (std::size_t n = 0; n <= m.depth(); ++n)
      for (auto const &v : level_vertices(m, n))
        EXPECT_EQ(a.apply(b.apply(v)), ab.apply(v));
    EXPECT_EQ(a.union_restriction() * b.union_restriction(), ab.union_restriction());
  }
}

TEST(PortraitTest, InverseUndoes)
{
  SphericalIndex const m({2, 4, 3});
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Portrait const a = random_portrait(m, rng);
    EXPECT_TRUE((a * inverse(a)).is_identity());
    EXPECT_TRUE((inverse(a) * a).is_identity());
  }
}

TEST(PortraitTest, UnionPermutationRoundTrips)
{
  SphericalIndex const m({2, 3, 2});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Portrait const a = random_portrait(m, rng);
    EXPECT_EQ(a, portrait_from_union_perm(m, a.union_restriction()));
  }
  EXPECT_THROW(portrait_from_union_perm(m, Perm::from_cycles(union_size(m), {{0, 1}})),
               ArgumentError);
}

TEST(PortraitTest, LevelRestrictionIsLexicographic)
{
  SphericalIndex const m({2, 2});
  Portrait const a = Portrait::from_level_perms(m, {Perm::from_cycles(2, {{0, 1}}), Perm(2)});
  EXPECT_EQ(Perm({2, 3, 0, 1}), a.level_restriction(2));
  EXPECT_EQ(Perm({1, 0}), a.level_restriction(1));
  EXPECT_EQ(Perm(1), a.level_restriction(0));
  EXPECT_THROW(a.level_restriction(3), ArgumentError);
}

TEST(PortraitTest, WreathDecompositionRebuildsTheAction)
{
  SphericalIndex const m({3, 2, 2});
  std::mt19937_64 rng(14);
  Portrait const a = random_portrait(m, rng);
  for (std::size_t i = 0; i < m.depth(); ++i) {
    auto const parts = wreath_decompose(a, i);
    Perm const next = a.level_restriction(i + 1);
    std::uint32_t const mi = m.branching(i + 1);
    for (Point v = 0; v < parts.head.degree(); ++v)
      for (Point c = 0; c < mi; ++c) {
        auto const [v2, c2] = wreath_act(parts.head, parts.tail, v, c);
        EXPECT_EQ(v2 * mi + c2, next(v * mi + c));
      }
  }
}

TEST(PortraitTest, ConstructorsValidateShape)
{
  SphericalIndex const m({2, 3});
  EXPECT_THROW(Portrait(m, {{Perm(2)}}), ArgumentError);
  EXPECT_THROW(Portrait::single_vertex(m, VertexAddress{{0, 0}}, Perm(2)), ArgumentError);
  EXPECT_THROW(Portrait::single_vertex(m, VertexAddress{{0}}, Perm(2)), ArgumentError);
  EXPECT_THROW(Portrait::from_level_perms(m, {Perm(3), Perm(2)}), ArgumentError);
  EXPECT_THROW(Portrait(m) * Portrait(SphericalIndex({2, 2})), ArgumentError);
}
