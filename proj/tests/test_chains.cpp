#include <gtest/gtest.h>

#include "arboreal/chains.hpp"
#include "arboreal/constructions.hpp"
#include "arboreal/error.hpp"
#include "arboreal/oracle.hpp"

using namespace arboreal;

namespace {

LevelGroupSystem cyclic_wreath(std::uint32_t k, std::size_t d)
{
  WreathConfig cfg;
  cfg.index = SphericalIndex(std::vector<std::uint32_t>(d, k));
  cfg.groups.assign(d, PermGroup::cyclic(k));
  return build_wreath(cfg);
}

PathPrefix zeros(std::size_t d)
{
  return PathPrefix{std::vector<Point>(d, 0)};
}

} // namespace

TEST(ChainsTest, LevelGroupsOfTheBinaryWreathProduct)
{
  auto const sys = cyclic_wreath(2, 4);
  std::vector<int> const expected{1, 2, 8, 128, 32768};
  for (std::size_t n = 0; n <= 4; ++n)
    EXPECT_EQ(expected[n], sys.level_group(n).order()) << "level " << n;
  EXPECT_EQ(32768, sys.tree_group().order());
}

TEST(ChainsTest, OdometerActsRegularlyOnEachLevel)
{
  auto const sys = build_odometer(3, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(level_size(sys.tree(), n), sys.level_group(n).order());
    EXPECT_TRUE(sys.level_group(n).is_transitive());
  }
}

TEST(ChainsTest, TruncationKeepsLowerLevels)
{
  auto const sys = cyclic_wreath(2, 4);
  auto const t = sys.truncate(2);
  EXPECT_EQ(2u, t.depth());
  EXPECT_EQ(sys.level_group(2).order(), t.tree_group().order());
  EXPECT_THROW(sys.truncate(5), ArgumentError);
}

TEST(ChainsTest, SubtreeAndPathPoints)
{
  SphericalIndex const m({2, 3});
  auto const x = PathPrefix{{1, 2}};
  EXPECT_EQ((std::vector<Point>{2, 8}), path_points(m, x, 2));
  // children of (1) are level-2 vertices 3, 4, 5 at offset 3
  EXPECT_EQ((std::vector<Point>{6, 7, 8}), subtree_points(m, VertexAddress{{1}}));
  EXPECT_TRUE(subtree_points(m, x).empty());
}

TEST(ChainsTest, StabilizerChainIndicesMatchLevelSizes)
{
  auto const sys = cyclic_wreath(3, 3);
  auto const chain = vertex_stabilizer_chain(sys, zeros(3));
  ASSERT_EQ(4u, chain.stabilizers.size());
  for (std::size_t n = 0; n <= 3; ++n)
    EXPECT_EQ(sys.tree_group().order(),
              chain.stabilizers[n].order() * level_size(sys.tree(), n));
}

TEST(ChainsTest, CoreIsTheKernelOfTheLevelAction)
{
  auto const sys = cyclic_wreath(2, 3);
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t kernel = 0;
    for (auto const &g : E.elements())
      kernel += restrict_to_level(sys.tree(), g, n).is_identity();
    EXPECT_EQ(kernel, core(sys, n).order()) << "n = " << n;
  }
  EXPECT_EQ(1, core(sys, 3).order());
}

TEST(ChainsTest, DiscriminantFixesThePath)
{
  auto const sys = cyclic_wreath(2, 4);
  auto const D = discriminant_truncation(sys, zeros(4));
  EXPECT_EQ(2048, D.order());
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());
  auto const pts = path_points(sys.tree(), zeros(4), 4);
  EXPECT_EQ(E.pointwise_stabilizer(pts).size(), D.order());
}

TEST(ChainsTest, CosetLabelsAreConjugateStabilizers)
{
  auto const sys = cyclic_wreath(3, 2);
  auto const lab = coset_labeling(sys, PathPrefix{{1, 2}}, 2);
  ASSERT_EQ(9u, lab.representatives.size());
  Point const xn = union_point(sys.tree(), PathPrefix{{1, 2}});
  auto const off = static_cast<Point>(union_offset(sys.tree(), 2));
  for (Point k = 0; k < 9; ++k)
    EXPECT_EQ(off + k, lab.representatives[k](xn));
  EXPECT_TRUE(lab.isotropy_verified);
}

TEST(ChainsTest, CosetLabelingNeedsTransitivity)
{
  SphericalIndex const m({2, 2});
  LevelGroupSystem const sys(m, {Portrait::single_vertex(m, VertexAddress{{0}}, Perm({1, 0}))});
  EXPECT_THROW(coset_labeling(sys, PathPrefix{{0, 0}}, 2), ArgumentError);
}
