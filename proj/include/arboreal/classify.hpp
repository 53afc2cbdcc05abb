#pragma once

#include <string>
#include <vector>

#include "arboreal/chains.hpp"

namespace arboreal {

/// Elements of the discriminant truncation acting trivially on every
/// vertex below x_n (the depth-d shadow of K_n).
PermGroup stabilizer_K(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n);

/// The depth-d truncation of the elements preserving the cylinder of x_n.
PermGroup cylinder_stabilizer(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n);

/// Elements of stabilizer_K commuting with all of cylinder_stabilizer. An
/// upper bound for Z_n: decorations near depth d can commute spuriously.
PermGroup centralizer_Z_upper(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n,
                              std::uint64_t node_budget = std::uint64_t{1} << 20);

struct RowFlags {
  bool z_equals_k = false;        ///< Z_upper == K at this n
  bool z_proper = false;          ///< Z_upper is a proper subgroup of K
  bool z_kernel_certificate = false;  ///< Z_upper acts trivially on V_{d-1}
  bool k_grew = false;            ///< |K_n| > |K_{n-1}|
};

struct ChainRow {
  std::size_t n = 0;
  BigInt k_order;
  BigInt z_upper_order;
  RowFlags flags;
};

struct ClassificationFlags {
  bool wild_evidence = false;
  bool stable_evidence = false;
  bool finite_type_evidence = false;
  bool flat_type_evidence = false;
  bool dynamically_wild_evidence = false;
  bool algebraically_stable_evidence = false;
};

struct ChainReport {
  std::size_t depth = 0;
  std::size_t buffer = 0;
  PathPrefix path;
  std::vector<ChainRow> rows;
  ClassificationFlags flags;
  std::string horizon_caveat;
};

/// Evidence over the rows in the report; never a proof about the infinite chain.
ClassificationFlags classify_flags(ChainReport const &report);

/// Rows n = 0..n_max. Requires n_max + buffer <= depth.
ChainReport chain_report(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n_max,
                         std::size_t buffer = 2);

struct NonHausdorffLevel {
  std::size_t level = 0;
  bool moves_in_cylinder = false;     ///< moves a depth-d vertex below x_level
  bool fixed_subtree_in_cylinder = false;  ///< an off-path vertex below x_level with fixed subtree
};

struct NonHausdorffVerdict {
  std::vector<NonHausdorffLevel> levels;  ///< level = 0..d-2
  bool witness_consistent = false;
};

/// Checks both witness conditions for every level up to d-2. Throws
/// ArgumentError if `a` does not fix x.
NonHausdorffVerdict non_hausdorff_check(Portrait const &a, PathPrefix const &x);

} // namespace arboreal
