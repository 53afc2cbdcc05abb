#pragma once

#include <functional>
#include <string>
#include <vector>

namespace arboreal {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Exact level-group order of the default product config.
CheckResult check_product_order();
/// Each CRT power of a generator is supported on a single coordinate.
CheckResult check_crt_isolation();
/// |K_1|, |K_2| at depth 2, a brute-force cross-check, and a non-commuting
/// witness for every nontrivial element of K_n.
CheckResult check_centralizer_triviality();
/// Alt(3..12) primitive; the 4-cycle group imprimitive with a valid block system.
CheckResult check_primitivity();
/// Brute-force |K_1| of the binary wreath product at depth 4, structural
/// counts at depth 5.
CheckResult check_wreath_k_orders();
/// Brute-force centralizer at depth 4, n = 1, acts trivially on V_3.
CheckResult check_wreath_z_kernel();
/// Witness portrait passes at every level; identity and a fully decorated
/// portrait fail one condition each.
CheckResult check_nonhausdorff();
/// Product of a regular system with the binary wreath product at depth 5.
CheckResult check_product_witness();
/// Ultrametric axioms on random path triples.
CheckResult check_metric();
/// Stabilizer-chain engine against exhaustive enumeration.
CheckResult check_perm_oracle();

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
};

std::vector<Suite> const &suites();

/// Runs every check of the named suite, timing each. Throws ArgumentError
/// for an unknown name.
std::vector<CheckResult> run_suite(std::string const &name);

/// Runs one check, recording its wall time and turning exceptions into failures.
CheckResult run_check(Check const &check);

} // namespace arboreal
