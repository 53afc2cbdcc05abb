#include "arboreal/portrait.hpp"

#include <algorithm>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

std::vector<std::vector<Perm>> identity_decorations(SphericalIndex const &tree)
{
  std::vector<std::vector<Perm>> dec(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i)
    dec[i].assign(level_size(tree, i), Perm(tree.branching(i + 1)));
  return dec;
}

void require_same_tree(Portrait const &a, Portrait const &b)
{
  if (!(a.tree() == b.tree()))
    throw ArgumentError("portraits live on different trees");
}

} // namespace

Portrait::Portrait(SphericalIndex tree)
: tree_(std::move(tree)), dec_(identity_decorations(tree_))
{}

Portrait::Portrait(SphericalIndex tree, std::vector<std::vector<Perm>> decorations)
: tree_(std::move(tree)), dec_(std::move(decorations))
{
  if (dec_.size() != tree_.depth())
    throw ArgumentError("portrait needs one decoration row per internal level");
  for (std::size_t i = 0; i < dec_.size(); ++i) {
    if (dec_[i].size() != level_size(tree_, i))
      throw ArgumentError("portrait decoration row has the wrong length");
    for (auto const &p : dec_[i])
      if (p.degree() != tree_.branching(i + 1))
        throw ArgumentError("portrait decoration has the wrong degree");
  }
}

Portrait Portrait::single_vertex(SphericalIndex tree, VertexAddress const &v, Perm p)
{
  validate(tree, v);
  if (v.level() >= tree.depth())
    throw ArgumentError("single_vertex: leaves carry no decoration");
  if (p.degree() != tree.branching(v.level() + 1))
    throw ArgumentError("single_vertex: decoration has the wrong degree");
  Portrait a(tree);
  a.dec_[v.level()][vertex_index(tree, v)] = std::move(p);
  return a;
}

Portrait Portrait::from_level_perms(SphericalIndex tree, std::vector<Perm> const &levels)
{
  if (levels.size() != tree.depth())
    throw ArgumentError("from_level_perms: one permutation per level is required");
  std::vector<std::vector<Perm>> dec(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i) {
    if (levels[i].degree() != tree.branching(i + 1))
      throw ArgumentError("from_level_perms: degree mismatch");
    dec[i].assign(level_size(tree, i), levels[i]);
  }
  return Portrait(std::move(tree), std::move(dec));
}

Perm const &Portrait::decoration(std::size_t level, std::uint64_t index) const
{
  if (level >= dec_.size() || index >= dec_[level].size())
    throw ArgumentError("decoration: vertex out of range");
  return dec_[level][index];
}

Perm const &Portrait::decoration(VertexAddress const &v) const
{
  return decoration(v.level(), vertex_index(tree_, v));
}

bool Portrait::is_identity() const
{
  for (auto const &row : dec_)
    for (auto const &p : row)
      if (!p.is_identity())
        return false;
  return true;
}

VertexAddress Portrait::apply(VertexAddress const &v) const
{
  validate(tree_, v);
  VertexAddress out;
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < v.level(); ++i) {
    Point const c = dec_[i][w](v.digits[i]);
    out.digits.push_back(c);
    w = w * tree_.branching(i + 1) + c;
  }
  return out;
}

std::uint64_t Portrait::apply_index(std::size_t n, std::uint64_t k) const
{
  return vertex_index(tree_, apply(vertex_at(tree_, n, k)));
}

Perm Portrait::level_restriction(std::size_t n) const
{
  if (n > depth())
    throw ArgumentError("level_restriction: level exceeds depth");
  // images of V_i built level by level from images of V_{i-1}
  std::vector<Point> img{0};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t const mi = tree_.branching(i + 1);
    std::vector<Point> next(img.size() * mi);
    for (std::size_t v = 0; v < img.size(); ++v) {
      Point const w = img[v];
      Perm const &d = dec_[i][w];
      for (Point c = 0; c < mi; ++c)
        next[v * mi + c] = w * mi + d(c);
    }
    img = std::move(next);
  }
  return Perm::unchecked(std::move(img));
}

Perm Portrait::union_restriction() const
{
  std::vector<Point> img;
  img.reserve(union_size(tree_));
  for (std::size_t n = 0; n <= depth(); ++n) {
    auto const off = static_cast<Point>(union_offset(tree_, n));
    Perm const r = level_restriction(n);
    for (Point q : r.images())
      img.push_back(off + q);
  }
  return Perm::unchecked(std::move(img));
}

Portrait compose(Portrait const &a, Portrait const &b)
{
  require_same_tree(a, b);
  auto const &tree = a.tree();
  std::vector<std::vector<Perm>> dec(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i) {
    Perm const rb = b.level_restriction(i);
    Perm const ra = a.level_restriction(i);
    dec[i].resize(level_size(tree, i), Perm(tree.branching(i + 1)));
    for (Point v = 0; v < rb.degree(); ++v) {
      Point const v1 = rb(v);
      Point const v2 = ra(v1);
      dec[i][v2] = a.decoration(i, v2) * b.decoration(i, v1);
    }
  }
  return Portrait(tree, std::move(dec));
}

Portrait inverse(Portrait const &a)
{
  auto const &tree = a.tree();
  std::vector<std::vector<Perm>> dec(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i) {
    Perm const r = a.level_restriction(i);
    dec[i].reserve(r.degree());
    for (Point w = 0; w < r.degree(); ++w)
      dec[i].push_back(a.decoration(i, r(w)).inverse());
  }
  return Portrait(tree, std::move(dec));
}

std::pair<Point, Point> wreath_act(Perm const &s, std::vector<Perm> const &f, Point x, Point y)
{
  if (f.size() != s.degree())
    throw ArgumentError("wreath_act: one tail permutation per head point is required");
  if (x >= s.degree())
    throw ArgumentError("wreath_act: head point out of range");
  Point const sx = s(x);
  if (y >= f[sx].degree())
    throw ArgumentError("wreath_act: tail point out of range");
  return {sx, f[sx](y)};
}

WreathParts wreath_decompose(Portrait const &a, std::size_t i)
{
  if (i >= a.depth())
    throw ArgumentError("wreath_decompose: level must be below the depth");
  return {a.level_restriction(i), a.decorations()[i]};
}

Portrait portrait_from_union_perm(SphericalIndex const &tree, Perm const &g)
{
  if (g.degree() != union_size(tree))
    throw ArgumentError("portrait_from_union_perm: degree mismatch");
  std::vector<std::vector<Perm>> dec(tree.depth());
  for (std::size_t i = 0; i < tree.depth(); ++i) {
    auto const off = union_offset(tree, i);
    auto const off1 = union_offset(tree, i + 1);
    std::uint32_t const mi = tree.branching(i + 1);
    auto const sz = level_size(tree, i);
    dec[i].resize(sz, Perm(mi));
    for (std::uint64_t v = 0; v < sz; ++v) {
      auto const gv = g(static_cast<Point>(off + v));
      if (gv < off || gv >= off1)
        throw ArgumentError("portrait_from_union_perm: permutation does not preserve levels");
      auto const w = gv - off;
      std::vector<Point> d(mi);
      for (Point c = 0; c < mi; ++c) {
        auto const child = g(static_cast<Point>(off1 + v * mi + c));
        auto const rel = static_cast<std::int64_t>(child) - static_cast<std::int64_t>(off1 + w * mi);
        if (rel < 0 || rel >= mi)
          throw ArgumentError("portrait_from_union_perm: permutation breaks an edge");
        d[c] = static_cast<Point>(rel);
      }
      dec[i][w] = Perm(std::move(d));
    }
  }
  return Portrait(tree, std::move(dec));
}

} // namespace arboreal
