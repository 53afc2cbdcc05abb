#include "arboreal/tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "arboreal/error.hpp"

namespace arboreal {

SphericalIndex::SphericalIndex(std::vector<std::uint32_t> entries)
: m_(std::move(entries))
{
  for (auto e : m_)
    if (e < 2)
      throw ArgumentError("spherical index entries must be at least 2");
}

std::uint32_t SphericalIndex::branching(std::size_t i) const
{
  if (i == 0 || i > m_.size())
    throw ArgumentError("branching: level out of range");
  return m_[i - 1];
}

SphericalIndex SphericalIndex::truncate(std::size_t d) const
{
  if (d > m_.size())
    throw ArgumentError("truncate: depth exceeds index length");
  SphericalIndex r;
  r.m_.assign(m_.begin(), m_.begin() + static_cast<std::ptrdiff_t>(d));
  return r;
}

void validate(SphericalIndex const &m, VertexAddress const &v)
{
  if (v.level() > m.depth())
    throw ArgumentError("vertex deeper than the tree");
  for (std::size_t i = 0; i < v.level(); ++i)
    if (v.digits[i] >= m.branching(i + 1))
      throw ArgumentError("vertex digit out of range");
}

void validate_path(SphericalIndex const &m, PathPrefix const &p)
{
  if (p.level() != m.depth())
    throw ArgumentError("path prefix must reach the tree depth");
  validate(m, p);
}

std::uint64_t level_size(SphericalIndex const &m, std::size_t n)
{
  if (n > m.depth())
    throw ArgumentError("level_size: level exceeds depth");
  std::uint64_t s = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / m.branching(i))
      throw ArgumentError("level_size: overflow");
    s *= m.branching(i);
  }
  return s;
}

VertexAddress parent(VertexAddress const &v)
{
  if (v.digits.empty())
    throw ArgumentError("the root has no parent");
  VertexAddress p = v;
  p.digits.pop_back();
  return p;
}

std::vector<VertexAddress> children(SphericalIndex const &m, VertexAddress const &v)
{
  validate(m, v);
  if (v.level() >= m.depth())
    throw ArgumentError("children: vertex is at maximal depth");
  std::vector<VertexAddress> out;
  for (Point a = 0; a < m.branching(v.level() + 1); ++a) {
    VertexAddress c = v;
    c.digits.push_back(a);
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t vertex_index(SphericalIndex const &m, VertexAddress const &v)
{
  validate(m, v);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < v.level(); ++i)
    idx = idx * m.branching(i + 1) + v.digits[i];
  return idx;
}

VertexAddress vertex_at(SphericalIndex const &m, std::size_t level, std::uint64_t index)
{
  if (index >= level_size(m, level))
    throw ArgumentError("vertex_at: index out of range");
  VertexAddress v;
  v.digits.resize(level);
  for (std::size_t i = level; i > 0; --i) {
    v.digits[i - 1] = static_cast<Point>(index % m.branching(i));
    index /= m.branching(i);
  }
  return v;
}

std::uint64_t union_offset(SphericalIndex const &m, std::size_t level)
{
  std::uint64_t off = 0;
  for (std::size_t i = 0; i < level; ++i)
    off += level_size(m, i);
  return off;
}

std::uint64_t union_size(SphericalIndex const &m) { return union_offset(m, m.depth() + 1); }

Point union_point(SphericalIndex const &m, VertexAddress const &v)
{
  return static_cast<Point>(union_offset(m, v.level()) + vertex_index(m, v));
}

VertexAddress union_vertex(SphericalIndex const &m, Point p)
{
  std::uint64_t rest = p;
  for (std::size_t n = 0; n <= m.depth(); ++n) {
    auto sz = level_size(m, n);
    if (rest < sz)
      return vertex_at(m, n, rest);
    rest -= sz;
  }
  throw ArgumentError("union_vertex: point out of range");
}

VertexAddress path_vertex(PathPrefix const &x, std::size_t n)
{
  if (n > x.level())
    throw ArgumentError("path_vertex: level beyond prefix");
  VertexAddress v;
  v.digits.assign(x.digits.begin(), x.digits.begin() + static_cast<std::ptrdiff_t>(n));
  return v;
}

boost::rational<std::int64_t> metric(SphericalIndex const &m, PathPrefix const &p,
                                     PathPrefix const &q)
{
  validate_path(m, p);
  validate_path(m, q);
  if (m.depth() > 62)
    throw ArgumentError("metric: depth above 62 is not representable");
  for (std::size_t i = 0; i < p.level(); ++i)
    if (p.digits[i] != q.digits[i])
      return {1, std::int64_t{1} << (i + 1)};
  return {0, 1};
}

bool in_cylinder(PathPrefix const &p, VertexAddress const &x_n)
{
  if (x_n.level() > p.level())
    return false;
  return std::equal(x_n.digits.begin(), x_n.digits.end(), p.digits.begin());
}

std::vector<VertexAddress> residual_vertices(SphericalIndex const &m, PathPrefix const &x,
                                             std::size_t n, std::size_t i)
{
  validate_path(m, x);
  if (i < n || i > m.depth())
    throw ArgumentError("residual_vertices: need n <= i <= depth");
  VertexAddress const xn = path_vertex(x, n);
  if (i == n)
    return {xn};
  VertexAddress const xn1 = path_vertex(x, n + 1);

  std::vector<VertexAddress> out;
  std::vector<VertexAddress> frontier{xn};
  for (std::size_t lev = n; lev < i; ++lev) {
    std::vector<VertexAddress> next;
    for (auto const &v : frontier)
      for (auto &c : children(m, v))
        if (!(lev == n && c == xn1))
          next.push_back(std::move(c));
    frontier = std::move(next);
  }
  out = std::move(frontier);
  return out;
}

std::vector<VertexAddress> level_vertices(SphericalIndex const &m, std::size_t n)
{
  std::vector<VertexAddress> out;
  auto const sz = level_size(m, n);
  out.reserve(sz);
  for (std::uint64_t k = 0; k < sz; ++k)
    out.push_back(vertex_at(m, n, k));
  return out;
}

std::string format_vertex(VertexAddress const &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.digits.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v.digits[i]);
  }
  return s;
}

VertexAddress parse_vertex(std::string_view text)
{
  VertexAddress v;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ')
    ++pos;
  if (pos == text.size())
    return v;
  while (true) {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    Point d = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), d);
    if (ec != std::errc())
      throw ArgumentError("malformed vertex text");
    v.digits.push_back(d);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw ArgumentError("malformed vertex text");
    ++pos;
  }
  return v;
}

} // namespace arboreal
