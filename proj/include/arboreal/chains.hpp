#pragma once

#include <memory>
#include <vector>

#include "arboreal/perm_group.hpp"
#include "arboreal/portrait.hpp"
#include "arboreal/tree.hpp"

namespace arboreal {

/**
 * A finitely generated group of tree automorphisms at truncation depth d,
 * together with its action on every level.
 *
 * Level groups are built on first use and cached; copies share the cache,
 * which is safe to query from several threads.
 */
class LevelGroupSystem {
public:
  LevelGroupSystem();
  LevelGroupSystem(SphericalIndex tree, std::vector<Portrait> generators);

  SphericalIndex const &tree() const { return tree_; }
  std::size_t depth() const { return tree_.depth(); }
  std::vector<Portrait> const &generators() const { return generators_; }

  /// Group on V_n generated by the level restrictions of the generators.
  PermGroup const &level_group(std::size_t n) const;

  /// Faithful action of the depth-d group on V_0 + ... + V_d. Every chain
  /// object below is a subgroup of this one.
  PermGroup const &tree_group() const;

  /// The same generators cut down to depth d' <= depth().
  LevelGroupSystem truncate(std::size_t d) const;

private:
  struct Cache;

  SphericalIndex tree_;
  std::vector<Portrait> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Permutation of V_n induced by an element of the tree group.
Perm restrict_to_level(SphericalIndex const &tree, Perm const &g, std::size_t n);

/// Points of the tree group occupied by x_1, ..., x_n.
std::vector<Point> path_points(SphericalIndex const &tree, PathPrefix const &x, std::size_t n);

/// Points of all vertices strictly below v down to the depth, listed level by level.
std::vector<Point> subtree_points(SphericalIndex const &tree, VertexAddress const &v);

struct ChainPoint {
  PathPrefix path;
  std::vector<PermGroup> stabilizers;  ///< stabilizers[n] = G_n fixing x_n
};

/// G_n = stabilizer of x_n in the tree group, for n = 0..d.
ChainPoint vertex_stabilizer_chain(LevelGroupSystem const &sys, PathPrefix const &x);

/// Kernel of the restriction to V_n: the subgroup fixing V_n pointwise.
/// Throws CertificationError if the result is not normal.
PermGroup core(LevelGroupSystem const &sys, std::size_t n);

/// Subgroup fixing x_1, ..., x_d.
PermGroup discriminant_truncation(LevelGroupSystem const &sys, PathPrefix const &x);

struct CosetLabeling {
  std::vector<Perm> representatives;  ///< representatives[k] maps x_n to vertex k of V_n
  PermGroup stabilizer;               ///< G_n
  bool isotropy_verified = false;     ///< Stab(g x_n) == g G_n g^-1 for every label
};

/// Labels V_n by cosets of G_n. Throws ArgumentError if the tree group is not
/// transitive on V_n.
CosetLabeling coset_labeling(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n);

} // namespace arboreal
