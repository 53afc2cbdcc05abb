#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "arboreal/perm.hpp"

namespace arboreal {

/**
 * Branching degrees (m_1, ..., m_d) of a depth-d spherically homogeneous
 * rooted tree. Level i vertices have m_{i+1} children each.
 */
class SphericalIndex {
public:
  SphericalIndex() = default;
  explicit SphericalIndex(std::vector<std::uint32_t> entries);

  std::size_t depth() const { return m_.size(); }
  /// m_i for 1 <= i <= depth().
  std::uint32_t branching(std::size_t i) const;
  std::vector<std::uint32_t> const &entries() const { return m_; }

  /// The first d entries.
  SphericalIndex truncate(std::size_t d) const;

  friend bool operator==(SphericalIndex const &, SphericalIndex const &) = default;

private:
  std::vector<std::uint32_t> m_;
};

/// A vertex given by its digits (a_1, ..., a_level); the root has none.
struct VertexAddress {
  std::vector<Point> digits;

  std::size_t level() const { return digits.size(); }
  friend bool operator==(VertexAddress const &, VertexAddress const &) = default;
  friend auto operator<=>(VertexAddress const &, VertexAddress const &) = default;
};

/// A vertex at maximal depth, standing for the boundary paths through it.
using PathPrefix = VertexAddress;

/// Throws ArgumentError unless every digit respects the index.
void validate(SphericalIndex const &m, VertexAddress const &v);
void validate_path(SphericalIndex const &m, PathPrefix const &p);

/// |V_n| = m_1 ... m_n; throws on n > depth or overflow of 64 bits.
std::uint64_t level_size(SphericalIndex const &m, std::size_t n);

VertexAddress parent(VertexAddress const &v);
std::vector<VertexAddress> children(SphericalIndex const &m, VertexAddress const &v);

/// Lexicographic position of v within its level.
std::uint64_t vertex_index(SphericalIndex const &m, VertexAddress const &v);
VertexAddress vertex_at(SphericalIndex const &m, std::size_t level, std::uint64_t index);

/// Vertices of V_0, ..., V_d laid out consecutively: the root is 0 and the
/// level-n block starts at union_offset(m, n).
std::uint64_t union_offset(SphericalIndex const &m, std::size_t level);
std::uint64_t union_size(SphericalIndex const &m);
Point union_point(SphericalIndex const &m, VertexAddress const &v);
VertexAddress union_vertex(SphericalIndex const &m, Point p);

/// Truncation of a path to level n.
VertexAddress path_vertex(PathPrefix const &x, std::size_t n);

/// 0 for equal prefixes, otherwise 1/2^k with k the first level whose digits
/// differ. Depth is limited to 62 levels.
boost::rational<std::int64_t> metric(SphericalIndex const &m, PathPrefix const &p,
                                     PathPrefix const &q);

/// True iff p passes through x_n.
bool in_cylinder(PathPrefix const &p, VertexAddress const &x_n);

/// V^n_i: level-i descendants of x_n that do not descend from x_{n+1}.
/// i == n gives {x_n}.
std::vector<VertexAddress> residual_vertices(SphericalIndex const &m, PathPrefix const &x,
                                             std::size_t n, std::size_t i);

/// All vertices of level n in lexicographic order.
std::vector<VertexAddress> level_vertices(SphericalIndex const &m, std::size_t n);

/// Digits as "0,1,2"; the root is the empty string.
std::string format_vertex(VertexAddress const &v);
VertexAddress parse_vertex(std::string_view text);

} // namespace arboreal
