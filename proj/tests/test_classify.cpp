#include <gtest/gtest.h>

#include "arboreal/classify.hpp"
#include "arboreal/constructions.hpp"
#include "arboreal/error.hpp"
#include "arboreal/oracle.hpp"

using namespace arboreal;

namespace {

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

std::vector<Perm> brute_K(LevelGroupSystem const &sys, EnumeratedGroup const &E,
                          PathPrefix const &x, std::size_t n)
{
  auto pts = path_points(sys.tree(), x, n);
  auto const sub = subtree_points(sys.tree(), path_vertex(x, n));
  pts.insert(pts.end(), sub.begin(), sub.end());
  return E.pointwise_stabilizer(pts);
}

} // namespace

TEST(ClassifyTest, StabilizerKMatchesFormulaAndEnumeration)
{
  auto const cfg = cyclic_config(2, 4);
  auto const sys = build_wreath(cfg);
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());
  auto const x = zeros(4);
  for (std::size_t n = 0; n <= 4; ++n) {
    BigInt const k = stabilizer_K(sys, x, n).order();
    EXPECT_EQ(k, expected_K_order(cfg, x, n, 4)) << "n = " << n;
    EXPECT_EQ(k, BigInt(brute_K(sys, E, x, n).size())) << "n = " << n;
  }
}

TEST(ClassifyTest, TernaryStabilizerKAgreesWithStructuralCount)
{
  auto const cfg = cyclic_config(3, 3);
  auto const sys = build_wreath(cfg);
  auto const x = PathPrefix{{2, 0, 1}};
  for (std::size_t n = 0; n <= 3; ++n) {
    BigInt const k = stabilizer_K(sys, x, n).order();
    EXPECT_EQ(k, wreath_K_structural_count(cfg, x, n, 3));
    EXPECT_EQ(k, expected_K_order(cfg, x, n, 3));
  }
}

TEST(ClassifyTest, CentralizerUpperBoundMatchesBruteForce)
{
  auto const sys = build_wreath(cyclic_config(2, 4));
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());
  auto const x = zeros(4);
  for (std::size_t n = 0; n <= 2; ++n) {
    auto const K = brute_K(sys, E, x, n);
    auto const U = E.pointwise_stabilizer(path_points(sys.tree(), x, n));
    auto const Z = EnumeratedGroup::centralizing(K, U);
    EXPECT_EQ(BigInt(Z.size()), centralizer_Z_upper(sys, x, n).order()) << "n = " << n;
  }
}

TEST(ClassifyTest, WreathReportIsDynamicallyWildEvidence)
{
  auto const sys = build_wreath(cyclic_config(2, 4));
  auto const rep = chain_report(sys, zeros(4), 2, 2);
  ASSERT_EQ(3u, rep.rows.size());
  EXPECT_EQ(1, rep.rows[0].k_order);
  EXPECT_EQ(128, rep.rows[1].k_order);
  EXPECT_EQ(1024, rep.rows[2].k_order);
  for (auto const &row : rep.rows)
    EXPECT_TRUE(row.flags.z_kernel_certificate);
  EXPECT_TRUE(rep.flags.wild_evidence);
  EXPECT_TRUE(rep.flags.dynamically_wild_evidence);
  EXPECT_FALSE(rep.flags.flat_type_evidence);
  EXPECT_TRUE(rep.flags.algebraically_stable_evidence);
  EXPECT_NE(std::string::npos, rep.horizon_caveat.find("evidence"));
}

TEST(ClassifyTest, OdometerIsStable)
{
  auto const sys = build_odometer(2, 5);
  auto const rep = chain_report(sys, zeros(5), 3, 2);
  for (auto const &row : rep.rows) {
    EXPECT_EQ(1, row.k_order);
    EXPECT_TRUE(row.flags.z_equals_k);
  }
  EXPECT_TRUE(rep.flags.stable_evidence);
  EXPECT_FALSE(rep.flags.wild_evidence);
}

TEST(ClassifyTest, ReportRespectsTheBuffer)
{
  auto const sys = build_wreath(cyclic_config(2, 4));
  EXPECT_THROW(chain_report(sys, zeros(4), 3, 2), ArgumentError);
  EXPECT_THROW(chain_report(sys, zeros(3), 1, 0), ArgumentError);
  EXPECT_NO_THROW(chain_report(sys, zeros(4), 4, 0));
}

TEST(ClassifyTest, FlagsFromRowsOnly)
{
  ChainReport r;
  for (int n = 0; n < 3; ++n) {
    ChainRow row;
    row.n = static_cast<std::size_t>(n);
    row.k_order = BigInt(1) << (3 * n);
    row.z_upper_order = row.k_order;
    row.flags.z_equals_k = true;
    r.rows.push_back(row);
  }
  auto const f = classify_flags(r);
  EXPECT_TRUE(f.wild_evidence);
  EXPECT_TRUE(f.flat_type_evidence);
  EXPECT_FALSE(f.dynamically_wild_evidence);
  EXPECT_FALSE(f.algebraically_stable_evidence);
}

TEST(ClassifyTest, NonHausdorffConditions)
{
  auto const cfg = cyclic_config(2, 6);
  auto const x = zeros(6);
  auto const w = nonhausdorff_witness_construct(cfg, x, 6);
  auto const v = non_hausdorff_check(w, x);
  EXPECT_TRUE(v.witness_consistent);
  ASSERT_EQ(5u, v.levels.size());

  auto const id = non_hausdorff_check(Portrait(cfg.index), x);
  EXPECT_FALSE(id.witness_consistent);
  for (auto const &lv : id.levels) {
    EXPECT_FALSE(lv.moves_in_cylinder);
    EXPECT_TRUE(lv.fixed_subtree_in_cylinder);
  }

  Portrait const swap_root = Portrait::from_level_perms(
      cfg.index, {Perm({1, 0}), Perm(2), Perm(2), Perm(2), Perm(2), Perm(2)});
  EXPECT_THROW(non_hausdorff_check(swap_root, x), ArgumentError);
}

TEST(ClassifyTest, TernaryWitnessUsesThreeCycles)
{
  auto const cfg = cyclic_config(3, 5);
  auto const x = zeros(5);
  auto const w = nonhausdorff_witness_construct(cfg, x, 5);
  EXPECT_TRUE(non_hausdorff_check(w, x).witness_consistent);
  EXPECT_THROW(nonhausdorff_witness_construct(cyclic_config(2, 3), zeros(3), 3), ArgumentError);
}
