#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arboreal/perm.hpp"
#include "arboreal/tree.hpp"

namespace arboreal {

/**
 * Automorphism of a depth-d truncated tree given by one permutation of the
 * children of every internal vertex.
 *
 * The decoration stored at vertex w permutes the children of w *after* the
 * ancestors have been mapped: the image of v.c is a(v).(dec[a(v)](c)).
 * Decorations are indexed by level and lexicographic vertex index.
 */
class Portrait {
public:
  Portrait() = default;

  /// Identity.
  explicit Portrait(SphericalIndex tree);

  /// decorations[i][k] decorates vertex k of level i (degree m_{i+1}).
  Portrait(SphericalIndex tree, std::vector<std::vector<Perm>> decorations);

  /// Identity except for `p` at vertex v.
  static Portrait single_vertex(SphericalIndex tree, VertexAddress const &v, Perm p);

  /// Coordinatewise action: every level-i vertex carries levels[i].
  static Portrait from_level_perms(SphericalIndex tree, std::vector<Perm> const &levels);

  SphericalIndex const &tree() const { return tree_; }
  std::size_t depth() const { return tree_.depth(); }

  Perm const &decoration(std::size_t level, std::uint64_t index) const;
  Perm const &decoration(VertexAddress const &v) const;
  std::vector<std::vector<Perm>> const &decorations() const { return dec_; }

  bool is_identity() const;

  VertexAddress apply(VertexAddress const &v) const;
  /// Image of the level-n vertex with lexicographic index k.
  std::uint64_t apply_index(std::size_t n, std::uint64_t k) const;

  /// The permutation of V_n in lexicographic vertex order.
  Perm level_restriction(std::size_t n) const;

  /// Action on V_0 + ... + V_d laid out as in union_point().
  Perm union_restriction() const;

  friend bool operator==(Portrait const &, Portrait const &) = default;

private:
  SphericalIndex tree_;
  std::vector<std::vector<Perm>> dec_;
};

/// apply(compose(a, b), v) == apply(a, apply(b, v)).
Portrait compose(Portrait const &a, Portrait const &b);
inline Portrait operator*(Portrait const &a, Portrait const &b) { return compose(a, b); }
Portrait inverse(Portrait const &a);

/// (x, y) -> (s(x), f(s(x))(y)).
std::pair<Point, Point> wreath_act(Perm const &s, std::vector<Perm> const &f, Point x, Point y);

struct WreathParts {
  Perm head;               ///< restriction to V_i
  std::vector<Perm> tail;  ///< tail[w] acts on the children of level-i vertex w
};

/// Splits a|V_{i+1} so that wreath_act(head, tail, w, c) is the image of w.c.
WreathParts wreath_decompose(Portrait const &a, std::size_t i);

/// Inverse of union_restriction(): reads decorations off a permutation of
/// V_0 + ... + V_d. Throws ArgumentError if the permutation is not a tree
/// automorphism.
Portrait portrait_from_union_perm(SphericalIndex const &tree, Perm const &g);

} // namespace arboreal
