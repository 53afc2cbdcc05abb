#include "arboreal/classify.hpp"

#include <algorithm>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

void check_level(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n)
{
  validate_path(sys.tree(), x);
  if (n > sys.depth())
    throw ArgumentError("level exceeds computation depth");
}

bool trivial_on_level(SphericalIndex const &tree, PermGroup const &G, std::size_t level)
{
  for (auto const &g : G.generators())
    if (!restrict_to_level(tree, g, level).is_identity())
      return false;
  return true;
}

} // namespace

PermGroup stabilizer_K(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n)
{
  check_level(sys, x, n);
  auto pts = path_points(sys.tree(), x, n);
  auto below = subtree_points(sys.tree(), path_vertex(x, n));
  pts.insert(pts.end(), below.begin(), below.end());
  return sys.tree_group().pointwise_stabilizer(pts);
}

PermGroup cylinder_stabilizer(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n)
{
  check_level(sys, x, n);
  return sys.tree_group().pointwise_stabilizer(path_points(sys.tree(), x, n));
}

PermGroup centralizer_Z_upper(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n,
                              std::uint64_t node_budget)
{
  PermGroup const K = stabilizer_K(sys, x, n);
  PermGroup const U = cylinder_stabilizer(sys, x, n);
  return centralizer(K, U.generators(), node_budget);
}

ClassificationFlags classify_flags(ChainReport const &report)
{
  ClassificationFlags f;
  auto const &rows = report.rows;
  f.finite_type_evidence = true;
  if (rows.empty())
    return f;

  bool strictly_growing = rows.size() >= 2;
  bool constant = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    strictly_growing = strictly_growing && rows[i].k_order > rows[i - 1].k_order;
    constant = constant && rows[i].k_order == rows[i - 1].k_order;
  }
  f.wild_evidence = strictly_growing;
  f.stable_evidence = constant;

  bool z_is_k_everywhere = true, z_proper_somewhere = false, z_bounded = true;
  for (auto const &r : rows) {
    z_is_k_everywhere = z_is_k_everywhere && r.flags.z_equals_k;
    z_proper_somewhere = z_proper_somewhere || r.flags.z_proper;
    z_bounded = z_bounded && (r.z_upper_order == 1 || r.flags.z_kernel_certificate);
  }
  f.flat_type_evidence = f.wild_evidence && z_is_k_everywhere;
  f.dynamically_wild_evidence = f.wild_evidence && z_proper_somewhere;
  f.algebraically_stable_evidence = z_bounded;
  return f;
}

ChainReport chain_report(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n_max,
                         std::size_t buffer)
{
  validate_path(sys.tree(), x);
  if (n_max + buffer > sys.depth())
    throw ArgumentError("n_max + buffer exceeds the computation depth");

  ChainReport rep;
  rep.depth = sys.depth();
  rep.buffer = buffer;
  rep.path = x;
  std::size_t const d = sys.depth();
  for (std::size_t n = 0; n <= n_max; ++n) {
    PermGroup const K = stabilizer_K(sys, x, n);
    PermGroup const Z = centralizer_Z_upper(sys, x, n);
    ChainRow row;
    row.n = n;
    row.k_order = K.order();
    row.z_upper_order = Z.order();
    row.flags.z_equals_k = Z.order() == K.order();
    row.flags.z_proper = Z.order() < K.order();
    row.flags.z_kernel_certificate = d >= 1 && trivial_on_level(sys.tree(), Z, d - 1);
    row.flags.k_grew = n > 0 && K.order() > rep.rows.back().k_order;
    rep.rows.push_back(std::move(row));
  }
  rep.flags = classify_flags(rep);
  rep.horizon_caveat =
      "evidence over n = 0.." + std::to_string(n_max) + " at truncation depth " +
      std::to_string(d) + " with buffer " + std::to_string(buffer) +
      "; z_upper_order is an upper bound for the centralizer chain and a finite horizon "
      "cannot decide boundedness";
  return rep;
}

NonHausdorffVerdict non_hausdorff_check(Portrait const &a, PathPrefix const &x)
{
  auto const &tree = a.tree();
  validate_path(tree, x);
  if (!(a.apply(x) == x))
    throw ArgumentError("non_hausdorff_check: portrait does not fix the path");
  std::size_t const d = tree.depth();

  // fixed_below[lev][k]: vertex k of level lev and all its descendants are fixed
  std::vector<std::vector<char>> fixed_below(d + 1);
  {
    Perm const r = a.level_restriction(d);
    fixed_below[d].resize(r.degree());
    for (Point k = 0; k < r.degree(); ++k)
      fixed_below[d][k] = r(k) == k;
  }
  for (std::size_t lev = d; lev-- > 0;) {
    Perm const r = a.level_restriction(lev);
    std::uint32_t const m = tree.branching(lev + 1);
    fixed_below[lev].resize(r.degree());
    for (Point k = 0; k < r.degree(); ++k) {
      bool ok = r(k) == k;
      for (Point c = 0; c < m && ok; ++c)
        ok = fixed_below[lev + 1][std::uint64_t{k} * m + c] != 0;
      fixed_below[lev][k] = ok;
    }
  }

  NonHausdorffVerdict verdict;
  verdict.witness_consistent = d >= 2;
  for (std::size_t l = 0; l + 2 <= d; ++l) {
    NonHausdorffLevel lv;
    lv.level = l;
    auto const xl = path_vertex(x, l);
    lv.moves_in_cylinder = !fixed_below[l][vertex_index(tree, xl)];

    // off-path vertices at levels l+1..d inside the cylinder of x_l
    std::uint64_t first = vertex_index(tree, xl), count = 1;
    for (std::size_t lev = l + 1; lev <= d && !lv.fixed_subtree_in_cylinder; ++lev) {
      first *= tree.branching(lev);
      count *= tree.branching(lev);
      auto const on_path = vertex_index(tree, path_vertex(x, lev));
      for (std::uint64_t k = first; k < first + count; ++k)
        if (k != on_path && fixed_below[lev][k]) {
          lv.fixed_subtree_in_cylinder = true;
          break;
        }
    }
    verdict.witness_consistent =
        verdict.witness_consistent && lv.moves_in_cylinder && lv.fixed_subtree_in_cylinder;
    verdict.levels.push_back(lv);
  }
  return verdict;
}

} // namespace arboreal
