#include "arboreal/chains.hpp"

#include <mutex>
#include <optional>

#include "arboreal/error.hpp"

namespace arboreal {

struct LevelGroupSystem::Cache {
  explicit Cache(std::size_t depth)
  : levels(depth + 1), level_once(std::make_unique<std::once_flag[]>(depth + 1))
  {}

  std::vector<std::optional<PermGroup>> levels;
  std::unique_ptr<std::once_flag[]> level_once;
  std::optional<PermGroup> tree;
  std::once_flag tree_once;
};

LevelGroupSystem::LevelGroupSystem()
: cache_(std::make_shared<Cache>(0))
{}

LevelGroupSystem::LevelGroupSystem(SphericalIndex tree, std::vector<Portrait> generators)
: tree_(std::move(tree)), generators_(std::move(generators)),
  cache_(std::make_shared<Cache>(tree_.depth()))
{
  for (auto const &g : generators_)
    if (!(g.tree() == tree_))
      throw ArgumentError("generator portrait lives on a different tree");
}

PermGroup const &LevelGroupSystem::level_group(std::size_t n) const
{
  if (n > depth())
    throw ArgumentError("level_group: level exceeds depth");
  std::call_once(cache_->level_once[n], [&] {
    std::vector<Perm> gens;
    for (auto const &g : generators_)
      gens.push_back(g.level_restriction(n));
    cache_->levels[n].emplace(level_size(tree_, n), std::move(gens));
  });
  return *cache_->levels[n];
}

PermGroup const &LevelGroupSystem::tree_group() const
{
  std::call_once(cache_->tree_once, [&] {
    std::vector<Perm> gens;
    for (auto const &g : generators_)
      gens.push_back(g.union_restriction());
    cache_->tree.emplace(union_size(tree_), std::move(gens));
  });
  return *cache_->tree;
}

LevelGroupSystem LevelGroupSystem::truncate(std::size_t d) const
{
  auto const t = tree_.truncate(d);
  std::vector<Portrait> gens;
  for (auto const &g : generators_) {
    std::vector<std::vector<Perm>> dec(g.decorations().begin(),
                                       g.decorations().begin() + static_cast<std::ptrdiff_t>(d));
    gens.emplace_back(t, std::move(dec));
  }
  return LevelGroupSystem(t, std::move(gens));
}

Perm restrict_to_level(SphericalIndex const &tree, Perm const &g, std::size_t n)
{
  if (g.degree() != union_size(tree))
    throw ArgumentError("restrict_to_level: not a tree-group element");
  auto const off = static_cast<Point>(union_offset(tree, n));
  auto const sz = level_size(tree, n);
  std::vector<Point> img(sz);
  for (Point k = 0; k < sz; ++k)
    img[k] = g(off + k) - off;
  return Perm(std::move(img));
}

std::vector<Point> path_points(SphericalIndex const &tree, PathPrefix const &x, std::size_t n)
{
  std::vector<Point> pts;
  for (std::size_t i = 1; i <= n; ++i)
    pts.push_back(union_point(tree, path_vertex(x, i)));
  return pts;
}

std::vector<Point> subtree_points(SphericalIndex const &tree, VertexAddress const &v)
{
  validate(tree, v);
  std::vector<Point> pts;
  std::uint64_t first = vertex_index(tree, v), count = 1;
  for (std::size_t lev = v.level() + 1; lev <= tree.depth(); ++lev) {
    first *= tree.branching(lev);
    count *= tree.branching(lev);
    auto const off = union_offset(tree, lev);
    for (std::uint64_t k = 0; k < count; ++k)
      pts.push_back(static_cast<Point>(off + first + k));
  }
  return pts;
}

ChainPoint vertex_stabilizer_chain(LevelGroupSystem const &sys, PathPrefix const &x)
{
  validate_path(sys.tree(), x);
  ChainPoint cp;
  cp.path = x;
  auto const &G = sys.tree_group();
  cp.stabilizers.push_back(G);
  for (std::size_t n = 1; n <= sys.depth(); ++n)
    cp.stabilizers.push_back(G.point_stabilizer(union_point(sys.tree(), path_vertex(x, n))));
  return cp;
}

PermGroup core(LevelGroupSystem const &sys, std::size_t n)
{
  if (n > sys.depth())
    throw ArgumentError("core: level exceeds depth");
  auto const &G = sys.tree_group();
  std::vector<Point> pts;
  for (std::size_t lev = 1; lev <= n; ++lev) {
    auto const off = union_offset(sys.tree(), lev);
    for (std::uint64_t k = 0; k < level_size(sys.tree(), lev); ++k)
      pts.push_back(static_cast<Point>(off + k));
  }
  PermGroup C = G.pointwise_stabilizer(pts);
  if (!is_normal_in(C, G))
    throw CertificationError("core: kernel failed the normality check");
  return C;
}

PermGroup discriminant_truncation(LevelGroupSystem const &sys, PathPrefix const &x)
{
  validate_path(sys.tree(), x);
  return sys.tree_group().pointwise_stabilizer(path_points(sys.tree(), x, sys.depth()));
}

CosetLabeling coset_labeling(LevelGroupSystem const &sys, PathPrefix const &x, std::size_t n)
{
  validate_path(sys.tree(), x);
  if (n > sys.depth())
    throw ArgumentError("coset_labeling: level exceeds depth");
  auto const &tree = sys.tree();
  auto const &G = sys.tree_group();
  Point const xn = union_point(tree, path_vertex(x, n));
  auto const off = static_cast<Point>(union_offset(tree, n));
  auto const sz = level_size(tree, n);

  // Schreier tree from x_n
  std::vector<std::optional<Perm>> rep(sz);
  rep[xn - off] = Perm(G.degree());
  std::vector<Point> queue{xn};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Perm const u = *rep[queue[q] - off];
    for (auto const &s : G.generators()) {
      Point const t = s(queue[q]);
      if (!rep[t - off]) {
        rep[t - off] = s * u;
        queue.push_back(t);
      }
    }
  }
  if (queue.size() != sz)
    throw ArgumentError("coset_labeling: level action is not transitive");

  CosetLabeling out{{}, G.point_stabilizer(xn), true};
  for (auto &r : rep)
    out.representatives.push_back(std::move(*r));

  for (Point k = 0; k < sz; ++k) {
    Perm const &g = out.representatives[k];
    Perm const gi = g.inverse();
    PermGroup const stab_v = G.point_stabilizer(off + k);
    bool ok = stab_v.order() == out.stabilizer.order();
    for (auto const &h : out.stabilizer.generators())
      ok = ok && stab_v.contains(g * h * gi);
    out.isotropy_verified = out.isotropy_verified && ok;
  }
  return out;
}

} // namespace arboreal
