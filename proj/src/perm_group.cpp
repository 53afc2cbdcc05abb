#include "arboreal/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

using Level = PermGroup::Level;

Level make_level(std::size_t degree, Point base)
{
  Level L;
  L.base = base;
  L.position.assign(degree, -1);
  L.orbit.push_back(base);
  L.position[base] = 0;
  L.transversal.emplace_back(degree);
  return L;
}

// Extends orbit and transversal of L under its (possibly enlarged)
// generator list. Existing representatives are kept.
void extend_orbit(Level &L)
{
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    Point const beta = L.orbit[i];
    for (auto const &s : L.generators) {
      Point const gamma = s(beta);
      if (L.position[gamma] >= 0)
        continue;
      L.position[gamma] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(gamma);
      L.transversal.push_back(s * L.transversal[i]);
    }
  }
}

bool fixes_all(Perm const &g, std::span<Point const> pts)
{
  return std::all_of(pts.begin(), pts.end(), [&](Point p) { return g(p) == p; });
}

// Strips g through levels [start, end). Returns the residue and the level at
// which it left the chain (levels.size() when it passed through).
std::pair<Perm, std::size_t> sift(std::vector<Level> const &levels, Perm g,
                                  std::size_t start)
{
  std::size_t const n = g.degree();
  std::vector<Point> tmp(n);
  for (std::size_t l = start; l < levels.size(); ++l) {
    auto const &L = levels[l];
    Point const beta = g(L.base);
    if (!L.in_orbit(beta))
      return {std::move(g), l};
    // g <- rep(beta)^-1 * g, computed without forming the inverse
    auto const &u = L.rep(beta).images();
    auto img = g.images();
    std::vector<Point> inv_u(n);
    for (Point p = 0; p < n; ++p)
      inv_u[u[p]] = p;
    for (Point p = 0; p < n; ++p)
      tmp[p] = inv_u[img[p]];
    g = Perm::unchecked(tmp);
  }
  return {std::move(g), levels.size()};
}

std::vector<Point> dedupe(std::span<Point const> pts, std::size_t degree)
{
  std::vector<Point> out;
  std::vector<bool> seen(degree, false);
  for (Point p : pts) {
    if (p >= degree)
      throw ArgumentError("base point out of range");
    if (!seen[p]) {
      seen[p] = true;
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Point> current_base(std::vector<Level> const &levels)
{
  std::vector<Point> b;
  for (auto const &L : levels)
    b.push_back(L.base);
  return b;
}

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::vector<Point> base_prefix)
: degree_(degree), generators_(std::move(generators))
{
  if (degree == 0)
    throw ArgumentError("group degree must be positive");
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw ArgumentError("generator degree differs from group degree");
  schreier_sims(dedupe(base_prefix, degree_));
  finish();
}

PermGroup::PermGroup(FromChain, std::size_t degree, std::vector<Level> levels)
: degree_(degree), levels_(std::move(levels))
{
  if (!levels_.empty())
    generators_ = levels_.front().generators;
  finish();
}

void PermGroup::finish()
{
  order_ = 1;
  for (auto const &L : levels_)
    order_ *= L.orbit.size();
}

void PermGroup::schreier_sims(std::vector<Point> const &prefix)
{
  std::vector<Perm> strong;
  for (auto const &g : generators_)
    if (!g.is_identity())
      strong.push_back(g);

  std::vector<Point> base = prefix;
  for (auto const &g : strong)
    if (fixes_all(g, base))
      base.push_back(g.smallest_moved_point());

  levels_.clear();
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_.push_back(make_level(degree_, base[i]));
    auto fixed = std::span<Point const>(base).first(i);
    for (auto const &g : strong)
      if (fixes_all(g, fixed))
        levels_[i].generators.push_back(g);
    extend_orbit(levels_[i]);
  }

  // checked[l][s] holds the orbit positions whose Schreier generator for
  // generator s at level l has already sifted to the identity.
  std::vector<std::vector<std::vector<char>>> checked(levels_.size());

  auto ensure_checked_shape = [&](std::size_t l) {
    if (checked.size() <= l)
      checked.resize(l + 1);
    auto &c = checked[l];
    c.resize(levels_[l].generators.size());
    for (auto &row : c)
      row.resize(levels_[l].orbit.size(), 0);
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    ensure_checked_shape(li);
    bool restarted = false;
    for (std::size_t j = 0; j < levels_[li].orbit.size() && !restarted; ++j) {
      for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
        if (checked[li][s][j])
          continue;
        auto const &L = levels_[li];
        Point const beta = L.orbit[j];
        Perm const &gen = L.generators[s];
        Point const gamma = gen(beta);
        Perm schreier = L.rep(gamma).inverse() * gen * L.transversal[j];
        auto [h, l] = sift(levels_, std::move(schreier), li + 1);
        if (h.is_identity()) {
          checked[li][s][j] = 1;
          continue;
        }
        if (l == levels_.size()) {
          levels_.push_back(make_level(degree_, h.smallest_moved_point()));
        }
        for (std::size_t m = li + 1; m <= l; ++m) {
          levels_[m].generators.push_back(h);
          extend_orbit(levels_[m]);
        }
        i = static_cast<std::ptrdiff_t>(l);
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

void PermGroup::schreier_sims_known_order(std::vector<Point> const &prefix,
                                          BigInt const &target,
                                          PermGroup const &source)
{
  levels_.clear();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    levels_.push_back(make_level(degree_, prefix[i]));
    auto fixed = std::span<Point const>(prefix).first(i);
    for (auto const &g : generators_)
      if (!g.is_identity() && fixes_all(g, fixed))
        levels_[i].generators.push_back(g);
    extend_orbit(levels_[i]);
  }

  auto add_residue = [&](Perm const &g) {
    auto [h, l] = sift(levels_, g, 0);
    if (h.is_identity())
      return;
    if (l == levels_.size())
      levels_.push_back(make_level(degree_, h.smallest_moved_point()));
    for (std::size_t m = 0; m <= l; ++m) {
      levels_[m].generators.push_back(h);
      extend_orbit(levels_[m]);
    }
  };

  auto current_order = [&] {
    BigInt o = 1;
    for (auto const &L : levels_)
      o *= L.orbit.size();
    return o;
  };

  for (auto const &g : generators_)
    if (!g.is_identity())
      add_residue(g);

  std::mt19937_64 rng(0x243f6a8885a308d3ull ^ (degree_ * 31 + prefix.size()));
  std::size_t guard = 0;
  while (current_order() < target) {
    if (++guard > 100000)
      throw CertificationError("base change did not converge");
    add_residue(source.random_element(rng));
  }
  if (current_order() != target)
    throw CertificationError("base change overshot the known order");
}

PermGroup PermGroup::with_base_prefix(std::span<Point const> prefix) const
{
  auto pts = dedupe(prefix, degree_);
  auto cur = current_base(levels_);
  if (cur.size() >= pts.size() && std::equal(pts.begin(), pts.end(), cur.begin()))
    return *this;

  // Uniform random elements from the existing chain drive the rebuild; the
  // known order certifies completeness.
  PermGroup out(FromChain{}, degree_, {});
  out.generators_ = generators_;
  out.schreier_sims_known_order(pts, order_, *this);
  out.finish();
  return out;
}

PermGroup PermGroup::symmetric(std::size_t n)
{
  if (n <= 1)
    return PermGroup(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cyc}), Perm::from_cycles(n, {{0, 1}})});
}

PermGroup PermGroup::alternating(std::size_t n)
{
  if (n <= 2)
    return PermGroup(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n)
{
  if (n <= 1)
    return PermGroup(std::max<std::size_t>(n, 1));
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

bool PermGroup::contains(Perm const &g) const
{
  if (g.degree() != degree_)
    throw ArgumentError("degree mismatch in contains");
  return sift(levels_, g, 0).first.is_identity();
}

std::vector<Point> PermGroup::orbit(Point p) const
{
  if (p >= degree_)
    throw ArgumentError("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto const &g : generators_) {
      Point q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto o = orbit(p);
    for (Point q : o)
      seen[q] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup PermGroup::point_stabilizer(Point p) const
{
  if (p >= degree_)
    throw ArgumentError("point_stabilizer: point out of range");
  Point pts[] = {p};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<Point const> points) const
{
  auto pts = dedupe(points, degree_);
  if (pts.empty())
    return *this;
  PermGroup rebased = with_base_prefix(pts);
  auto &lv = rebased.levels_;
  if (lv.size() <= pts.size())
    return PermGroup(degree_);
  std::vector<Level> tail(std::make_move_iterator(lv.begin() + static_cast<std::ptrdiff_t>(pts.size())),
                          std::make_move_iterator(lv.end()));
  return PermGroup(FromChain{}, degree_, std::move(tail));
}

PrimitivityResult PermGroup::is_primitive() const
{
  if (!is_transitive())
    throw ArgumentError("is_primitive: group is not transitive");
  if (degree_ <= 2)
    return {true, std::nullopt};

  for (Point b = 1; b < degree_; ++b) {
    std::vector<Point> parent(degree_);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    std::vector<std::pair<Point, Point>> queue{{0, b}};
    parent[b] = 0;
    std::size_t classes = degree_ - 1;
    for (std::size_t q = 0; q < queue.size() && classes > 1; ++q) {
      auto [p1, p2] = queue[q];
      for (auto const &g : generators_) {
        Point a = find(g(p1)), c = find(g(p2));
        if (a == c)
          continue;
        parent[std::max(a, c)] = std::min(a, c);
        --classes;
        queue.emplace_back(a, c);
      }
    }
    if (classes > 1) {
      std::vector<std::vector<Point>> by_root(degree_);
      for (Point p = 0; p < degree_; ++p)
        by_root[find(p)].push_back(p);
      BlockSystem blocks;
      for (auto &blk : by_root)
        if (!blk.empty())
          blocks.push_back(std::move(blk));
      std::sort(blocks.begin(), blocks.end());
      return {false, std::move(blocks)};
    }
  }
  return {true, std::nullopt};
}

std::vector<Point> PermGroup::base() const { return current_base(levels_); }

Perm PermGroup::random_element(std::mt19937_64 &rng) const
{
  Perm g(degree_);
  for (auto const &L : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, L.transversal.size() - 1);
    g = g * L.transversal[pick(rng)];
  }
  return g;
}

bool operator==(PermGroup const &a, PermGroup const &b)
{
  if (a.degree_ != b.degree_ || a.order_ != b.order_)
    return false;
  return std::all_of(a.generators_.begin(), a.generators_.end(),
                     [&](Perm const &g) { return b.contains(g); });
}

bool is_subgroup(PermGroup const &sub, PermGroup const &group)
{
  if (sub.degree() != group.degree())
    return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Perm const &g) { return group.contains(g); });
}

bool is_normal_in(PermGroup const &sub, PermGroup const &group)
{
  for (auto const &g : group.generators()) {
    Perm gi = g.inverse();
    for (auto const &h : sub.generators())
      if (!sub.contains(g * h * gi))
        return false;
  }
  return true;
}

QuotientVerdict equivariant_quotient_check(PermGroup const &G, std::vector<Point> const &f)
{
  if (f.size() != G.degree())
    throw ArgumentError("quotient map must be defined on every point");
  QuotientVerdict v;
  std::size_t q = 0;
  for (Point y : f)
    q = std::max<std::size_t>(q, std::size_t{y} + 1);
  std::vector<char> hit(q, 0);
  for (Point y : f)
    hit[y] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
    v.violations.push_back("map is not onto {0.." + std::to_string(q - 1) + "}");
    return v;
  }

  v.equivariant = true;
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    auto const &g = G.generators()[k];
    std::vector<std::int64_t> img(q, -1);
    for (Point s = 0; s < G.degree(); ++s) {
      auto const target = static_cast<std::int64_t>(f[g(s)]);
      if (img[f[s]] < 0) {
        img[f[s]] = target;
      } else if (img[f[s]] != target) {
        v.equivariant = false;
        v.violations.push_back("generator " + std::to_string(k) + " splits the fibre of " +
                               std::to_string(f[s]));
        break;
      }
    }
    if (!v.equivariant)
      break;
    std::vector<Point> induced(img.begin(), img.end());
    v.induced.push_back(Perm(std::move(induced)));
  }
  if (!v.equivariant)
    v.induced.clear();

  v.primitive = G.is_transitive() && G.is_primitive().primitive;
  v.consistent = v.equivariant && (!v.primitive || q == 1 || q == G.degree());
  if (v.equivariant && !v.consistent)
    v.violations.push_back("primitive action has a proper nontrivial equivariant quotient");
  return v;
}

// ---------------------------------------------------------------------------
// centralizer backtrack

namespace {

class CentralizerSearch {
public:
  CentralizerSearch(PermGroup const &group, std::vector<Perm> commuting,
                    std::uint64_t budget)
  : levels_(group.levels()), c_(std::move(commuting)),
    n_(group.degree()), budget_(budget), img_(n_, -1), taken_(n_, 0)
  {}

  PermGroup run()
  {
    found_ = PermGroup(n_);
    identity_path(0);
    return found_;
  }

private:
  bool assign(Point p, Point q)
  {
    if (img_[p] >= 0)
      return static_cast<Point>(img_[p]) == q;
    if (taken_[q])
      return false;
    img_[p] = q;
    taken_[q] = 1;
    trail_.push_back(p);
    return true;
  }

  bool propagate(Point beta, Point gamma)
  {
    std::size_t const start = trail_.size();
    if (!assign(beta, gamma))
      return false;
    for (std::size_t i = start; i < trail_.size(); ++i) {
      Point const p = trail_[i];
      Point const q = static_cast<Point>(img_[p]);
      for (auto const &c : c_)
        if (!assign(c(p), c(q)))
          return false;
    }
    return true;
  }

  void undo(std::size_t mark)
  {
    while (trail_.size() > mark) {
      Point p = trail_.back();
      trail_.pop_back();
      taken_[static_cast<Point>(img_[p])] = 0;
      img_[p] = -1;
    }
  }

  void tick()
  {
    if (++nodes_ > budget_)
      throw BudgetExceeded("centralizer search exceeded its node budget");
  }

  std::optional<Perm> first_solution(std::size_t j, Perm const &h)
  {
    tick();
    if (j == levels_.size()) {
      for (Point p = 0; p < n_; ++p)
        if (img_[p] >= 0 && static_cast<Point>(img_[p]) != h(p))
          return std::nullopt;
      for (auto const &c : c_)
        if (!commutes(h, c))
          return std::nullopt;
      return h;
    }
    auto const &L = levels_[j];
    for (Point delta : L.orbit) {
      Point const gamma = h(delta);
      std::size_t const mark = trail_.size();
      if (propagate(L.base, gamma)) {
        auto r = first_solution(j + 1, h * L.rep(delta));
        if (r) {
          undo(mark);
          return r;
        }
      }
      undo(mark);
    }
    return std::nullopt;
  }

  void identity_path(std::size_t j)
  {
    if (j == levels_.size())
      return;
    tick();
    auto const &L = levels_[j];
    std::size_t const mark = trail_.size();
    if (!propagate(L.base, L.base))
      throw CertificationError("centralizer search: identity rejected");
    identity_path(j + 1);
    undo(mark);

    std::vector<Point> fixed;
    for (std::size_t i = 0; i < j; ++i)
      fixed.push_back(levels_[i].base);

    auto known_orbit = [&] {
      std::vector<char> in(n_, 0);
      for (Point p : found_.pointwise_stabilizer(fixed).orbit(L.base))
        in[p] = 1;
      return in;
    };
    auto covered = known_orbit();

    for (Point delta : L.orbit) {
      if (covered[delta])
        continue;
      std::size_t const m = trail_.size();
      // identity on earlier base points, delta on this one
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i)
        ok = propagate(levels_[i].base, levels_[i].base);
      if (ok && propagate(L.base, delta)) {
        if (auto z = first_solution(j + 1, L.rep(delta))) {
          solutions_.push_back(*z);
          found_ = PermGroup(n_, solutions_);
          covered = known_orbit();
        }
      }
      undo(m);
    }
  }

  std::vector<PermGroup::Level> const &levels_;
  std::vector<Perm> c_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> img_;
  std::vector<char> taken_;
  std::vector<Point> trail_;
  std::vector<Perm> solutions_;
  PermGroup found_;
};

} // namespace

PermGroup centralizer(PermGroup const &group, std::span<Perm const> commuting_with,
                      std::uint64_t node_budget)
{
  std::vector<Perm> c;
  for (auto const &g : commuting_with) {
    if (g.degree() != group.degree())
      throw ArgumentError("centralizer: degree mismatch");
    if (!g.is_identity())
      c.push_back(g);
  }
  if (c.empty() || group.is_trivial())
    return group;
  return CentralizerSearch(group, std::move(c), node_budget).run();
}

} // namespace arboreal
