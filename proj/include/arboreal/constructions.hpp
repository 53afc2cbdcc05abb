#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arboreal/chains.hpp"
#include "arboreal/classify.hpp"

namespace arboreal {

struct PrimeLevel {
  std::uint32_t p1 = 0;
  std::uint32_t p2 = 0;
  std::uint32_t o = 0;
};

/// Product-of-alternating-groups family: level n acts by Alt(o(n)) on
/// o(n) points, generated by a p1-cycle and a p2-cycle.
struct ProductConfig {
  std::vector<PrimeLevel> levels;
  std::size_t depth = 0;  ///< 0 means levels.size()
};

/// Iterated wreath product of transitive groups A_i on m_i points.
struct WreathConfig {
  SphericalIndex index;
  std::vector<PermGroup> groups;
  std::vector<std::string> group_names;  ///< as read from a config; may be empty
  std::size_t depth = 0;                 ///< 0 means index.depth()
};

struct PoVerdict {
  bool valid = true;
  std::vector<std::string> violations;
};

PoVerdict validate_po(ProductConfig const &cfg);

/// "C5", "A5"/"Alt5", "S4"/"Sym4" on the given number of points.
PermGroup named_group(std::string const &name, std::size_t degree);

/// Cycles of lengths l1 and l2 generating Alt(n), found by a deterministic
/// search: sigma1 = (0 1 ... l1-1) and sigma2 runs over supports and cyclic
/// arrangements in lexicographic order until the order n!/2 is certified.
std::pair<Perm, Perm> cycle_pair_generators(std::uint32_t l1, std::uint32_t l2, std::uint32_t n,
                                        std::uint64_t budget = 100000);

/// Smallest s > 0 with s = 1 mod p(a,k) and s = 0 mod p(a,i) for i != k.
/// a is 1 or 2, k is 1-based.
BigInt crt_exponent(ProductConfig const &cfg, int a, std::size_t k);

/// (sigma_{1,n}, sigma_{2,n}) for every level.
std::vector<std::pair<Perm, Perm>> product_level_generators(ProductConfig const &cfg);

LevelGroupSystem build_alternating_product(ProductConfig const &cfg);

/// Per level i and generator s of A_i: s at every level-(i-1) vertex, and s
/// at the single vertex 0...0 of level i-1. Certified by the order
/// prod_i |A_i|^|V_{i-1}|.
LevelGroupSystem build_wreath(WreathConfig const &cfg);

BigInt wreath_order(WreathConfig const &cfg);

/// |(A_{n+1})_{x_{n+1}}| * prod_{i=n+1}^{d-1} |A_{i+1}|^|V^n_i|.
BigInt expected_S_order(WreathConfig const &cfg, PathPrefix const &x, std::size_t n, std::size_t d);
BigInt expected_K_order(WreathConfig const &cfg, PathPrefix const &x, std::size_t n, std::size_t d);

/// |K_n| for a wreath system by counting free decorations vertex by vertex.
BigInt wreath_K_structural_count(WreathConfig const &cfg, PathPrefix const &x, std::size_t n,
                                 std::size_t d);

/// |K_n| for the product family: prod_{i<=n} (o(i)-1)!/2.
BigInt product_K_structural_count(ProductConfig const &cfg, std::size_t n);

/// The k-adic odometer on a depth-d tree: a single generator adding 1 with carry.
LevelGroupSystem build_odometer(std::uint32_t k, std::size_t depth);

/// Product tree with level sets X_n x Y_n (digit (a,b) encoded a*|Y|+b).
/// A shallower factor is padded with one-point levels.
LevelGroupSystem build_product_action(LevelGroupSystem const &sysH, LevelGroupSystem const &sysG);

/// The product-tree portrait acting as h on the first factor and g on the
/// second. Either may be null for the identity.
Portrait product_portrait(SphericalIndex const &product_tree, SphericalIndex const &treeH,
                          SphericalIndex const &treeG, Portrait const *h, Portrait const *g);

PathPrefix product_path(LevelGroupSystem const &sysH, LevelGroupSystem const &sysG,
                        PathPrefix const &x, PathPrefix const &y);

struct ProductWitness {
  Portrait g_hat;   ///< element of K_n^G
  Portrait s_hat;   ///< element of the cylinder stabilizer of G not commuting with g_hat
  Portrait r_hat;   ///< element of the cylinder stabilizer of H
  Portrait k_element;  ///< (id, g_hat) on the product tree
  Portrait u_element;  ///< (r_hat, s_hat) on the product tree
  bool k_member = false;
  bool u_member = false;
  bool noncommuting = false;
  BigInt k_product, k_h, k_g;
  bool order_factorizes = false;

  bool verified() const { return k_member && u_member && noncommuting && order_factorizes; }
};

/// Element of K_n(product) outside Z_n(product). Requires K_n^G nontrivial
/// and Z_upper(G) a proper subgroup of K_n^G at this depth; throws
/// ArgumentError otherwise.
ProductWitness product_proper_containment_witness(LevelGroupSystem const &sysH,
                                                  LevelGroupSystem const &sysG,
                                                  PathPrefix const &x, PathPrefix const &y,
                                                  std::size_t n);

/// Fixes x; for every l <= d-2 with l = d mod 2 the sibling of x_{l+1}
/// carries the first nontrivial generator of A_{l+2}. Requires d >= 4.
Portrait nonhausdorff_witness_construct(WreathConfig const &cfg, PathPrefix const &x,
                                        std::size_t d);

/// Consecutive odd primes, two per level, with o(n) = p1 + p2 - 1.
ProductConfig prime_scheme(std::size_t levels);

} // namespace arboreal
