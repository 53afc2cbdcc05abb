#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <span>
#include <vector>

#include "arboreal/bigint.hpp"
#include "arboreal/perm.hpp"

namespace arboreal {

/// A partition of the points into blocks, each block sorted, blocks sorted
/// by their smallest element.
using BlockSystem = std::vector<std::vector<Point>>;

struct PrimitivityResult {
  bool primitive;
  std::optional<BlockSystem> blocks;  ///< a nontrivial block system when imprimitive
};

/**
 * Finite permutation group given by generators.
 *
 * A base and strong generating set is built at construction (deterministic
 * Schreier-Sims), so the order is certified and membership is exact. Values
 * are immutable after construction.
 */
class PermGroup {
public:
  /// One level of the stabilizer chain: the group fixing base[0..i-1],
  /// its generators, and the orbit of base[i] with coset representatives.
  struct Level {
    Point base;
    std::vector<Perm> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  ///< point -> index in orbit, or -1
    std::vector<Perm> transversal;       ///< transversal[i](base) == orbit[i]

    bool in_orbit(Point p) const { return position[p] >= 0; }
    Perm const &rep(Point p) const { return transversal[static_cast<std::size_t>(position[p])]; }
  };

  explicit PermGroup(std::size_t degree = 1, std::vector<Perm> generators = {},
                     std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);  ///< generated by the n-cycle (0 1 ... n-1)

  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return generators_; }
  BigInt const &order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// Throws ArgumentError if g has a different degree.
  bool contains(Perm const &g) const;

  /// Sorted orbit of p under the generators.
  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;
  /// All orbits, each sorted, ordered by smallest element.
  std::vector<std::vector<Point>> orbits() const;

  PermGroup point_stabilizer(Point p) const;
  /// Subgroup fixing every listed point. Listing points top-down in a tree
  /// keeps the basic orbits short.
  PermGroup pointwise_stabilizer(std::span<Point const> points) const;

  /// Requires a transitive group; throws ArgumentError otherwise.
  PrimitivityResult is_primitive() const;

  std::vector<Point> base() const;
  std::vector<Level> const &levels() const { return levels_; }

  /// Calls f(std::span<Point const>) once per element (image lists).
  template <typename F>
  void for_each_element(F &&f) const;

  /// Uniformly random element built from random coset representatives.
  Perm random_element(std::mt19937_64 &rng) const;

  /// The same group with a BSGS whose base starts with the given points.
  PermGroup with_base_prefix(std::span<Point const> prefix) const;

  friend bool operator==(PermGroup const &a, PermGroup const &b);

private:
  struct FromChain {};
  PermGroup(FromChain, std::size_t degree, std::vector<Level> levels);

  void schreier_sims(std::vector<Point> const &prefix);
  void schreier_sims_known_order(std::vector<Point> const &prefix,
                                 BigInt const &target,
                                 PermGroup const &source);
  void finish();

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

/**
 * Subgroup of `group` whose elements commute with every permutation in
 * `commuting_with`. Backtrack over the stabilizer chain of `group`; an
 * element commuting with a set is determined on each orbit of that set by a
 * single image, which prunes almost every branch. Throws BudgetExceeded if
 * more than `node_budget` search nodes are visited.
 */
PermGroup centralizer(PermGroup const &group, std::span<Perm const> commuting_with,
                      std::uint64_t node_budget = std::uint64_t{1} << 20);

/// True iff every generator of `sub` lies in `group`.
bool is_subgroup(PermGroup const &sub, PermGroup const &group);

/// True iff g h g^-1 lies in `sub` for every generator h of `sub` and g of `group`.
bool is_normal_in(PermGroup const &sub, PermGroup const &group);

struct QuotientVerdict {
  bool equivariant = false;
  bool primitive = false;
  bool consistent = false;  ///< equivariant, and |Q| in {1, |S|} when primitive
  std::vector<Perm> induced;  ///< action on Q when equivariant
  std::vector<std::string> violations;
};

/// Checks that f: S -> Q = {0..q-1} is onto and G-equivariant for the action
/// it induces on Q, then the primitive dichotomy |Q| = 1 or |Q| = |S|.
QuotientVerdict equivariant_quotient_check(PermGroup const &G, std::vector<Point> const &f);

/// Elements are image lists of equal length; the result is the permutation
/// obtained by composing level representatives.
template <typename F>
void PermGroup::for_each_element(F &&f) const
{
  if (levels_.empty()) {
    Perm id(degree_);
    f(id.images());
    return;
  }
  std::size_t const depth = levels_.size();
  std::vector<std::vector<Point>> partial(depth + 1, std::vector<Point>(degree_));
  for (Point p = 0; p < degree_; ++p)
    partial[0][p] = p;
  std::vector<std::size_t> idx(depth, 0);

  std::size_t level = 0;
  while (true) {
    if (idx[level] < levels_[level].transversal.size()) {
      auto const &u = levels_[level].transversal[idx[level]].images();
      auto const &prev = partial[level];
      auto &cur = partial[level + 1];
      for (Point p = 0; p < degree_; ++p)
        cur[p] = prev[u[p]];
      ++idx[level];
      if (level + 1 == depth) {
        f(std::span<Point const>(cur));
      } else {
        ++level;
        idx[level] = 0;
      }
    } else {
      if (level == 0)
        break;
      --level;
    }
  }
}

} // namespace arboreal
