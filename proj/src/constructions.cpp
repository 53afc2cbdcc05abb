#include "arboreal/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

bool is_prime(std::uint32_t p)
{
  if (p < 2)
    return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      return false;
  return true;
}

std::size_t product_depth(ProductConfig const &cfg)
{
  std::size_t const d = cfg.depth == 0 ? cfg.levels.size() : cfg.depth;
  if (d > cfg.levels.size())
    throw ArgumentError("product config depth exceeds its number of levels");
  return d;
}

std::size_t wreath_depth(WreathConfig const &cfg)
{
  std::size_t const d = cfg.depth == 0 ? cfg.index.depth() : cfg.depth;
  if (d > cfg.index.depth() || cfg.groups.size() < d)
    throw ArgumentError("wreath config depth exceeds its index or group list");
  return d;
}

void check_wreath_groups(WreathConfig const &cfg, std::size_t d)
{
  for (std::size_t i = 1; i <= d; ++i) {
    auto const &A = cfg.groups[i - 1];
    if (A.degree() != cfg.index.branching(i))
      throw ArgumentError("level group degree differs from the spherical index");
    if (!A.is_transitive())
      throw ArgumentError("level group " + std::to_string(i) + " is not transitive");
  }
}

Perm cycle_on(std::uint32_t n, std::vector<Point> const &support)
{
  return Perm::from_cycles(n, {support});
}

// Digits of a product-tree vertex split into its two factor vertices. Padded
// levels carry the single digit 0 and do not change the factor index.
std::pair<std::uint64_t, std::uint64_t> split_index(SphericalIndex const &th,
                                                    SphericalIndex const &tg,
                                                    VertexAddress const &v)
{
  std::uint64_t ih = 0, ig = 0;
  for (std::size_t j = 0; j < v.level(); ++j) {
    std::uint32_t const mg = j < tg.depth() ? tg.branching(j + 1) : 1;
    Point const a = v.digits[j] / mg, b = v.digits[j] % mg;
    if (j < th.depth())
      ih = ih * th.branching(j + 1) + a;
    if (j < tg.depth())
      ig = ig * tg.branching(j + 1) + b;
  }
  return {ih, ig};
}

} // namespace

PoVerdict validate_po(ProductConfig const &cfg)
{
  PoVerdict v;
  auto fail = [&](std::string msg) {
    v.valid = false;
    v.violations.push_back(std::move(msg));
  };
  if (cfg.levels.empty())
    fail("no levels");
  std::set<std::uint32_t> seen;
  for (std::size_t n = 0; n < cfg.levels.size(); ++n) {
    auto const &L = cfg.levels[n];
    std::string const tag = "level " + std::to_string(n + 1) + ": ";
    for (auto p : {L.p1, L.p2}) {
      if (!is_prime(p) || p == 2)
        fail(tag + std::to_string(p) + " is not an odd prime");
      if (!seen.insert(p).second)
        fail(tag + "prime " + std::to_string(p) + " is used twice");
      if (p > L.o)
        fail(tag + std::to_string(p) + " exceeds o = " + std::to_string(L.o));
    }
    if (std::uint64_t{L.o} >= std::uint64_t{L.p1} + L.p2)
      fail(tag + "o = " + std::to_string(L.o) + " is not below p1 + p2 = " +
           std::to_string(L.p1 + L.p2));
  }
  if (cfg.depth > cfg.levels.size())
    fail("depth exceeds the number of levels");
  return v;
}

PermGroup named_group(std::string const &name, std::size_t degree)
{
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split])))
    ++split;
  std::string const kind = name.substr(0, split);
  std::string const num = name.substr(split);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ArgumentError("group name needs a degree: " + name);
  std::size_t const k = std::stoul(num);
  if (k != degree)
    throw ArgumentError("group " + name + " does not act on " + std::to_string(degree) + " points");
  if (kind == "C")
    return PermGroup::cyclic(k);
  if (kind == "A" || kind == "Alt")
    return PermGroup::alternating(k);
  if (kind == "S" || kind == "Sym")
    return PermGroup::symmetric(k);
  throw ArgumentError("unknown group name: " + name);
}

std::pair<Perm, Perm> cycle_pair_generators(std::uint32_t l1, std::uint32_t l2, std::uint32_t n,
                                        std::uint64_t budget)
{
  if (l1 < 3 || l2 < 3 || l1 % 2 == 0 || l2 % 2 == 0)
    throw ArgumentError("cycle_pair_generators: cycle lengths must be odd and at least 3");
  if (l1 > n || l2 > n || n >= l1 + l2)
    throw ArgumentError("cycle_pair_generators: need l1, l2 <= n < l1 + l2");

  std::vector<Point> s1(l1);
  std::iota(s1.begin(), s1.end(), Point{0});
  Perm const sigma1 = cycle_on(n, s1);
  BigInt const target = factorial(n) / 2;

  std::uint32_t const k = l2 - (n - l1);  // points shared with sigma1's support
  std::vector<char> choose(l1, 0);
  std::fill(choose.begin(), choose.begin() + k, 1);  // lexicographically first subset
  std::uint64_t tried = 0;
  do {
    std::vector<Point> support;
    for (Point p = 0; p < l1; ++p)
      if (choose[p])
        support.push_back(p);
    for (Point p = l1; p < n; ++p)
      support.push_back(p);
    // cyclic arrangements: first point fixed, the rest in lexicographic order
    do {
      if (++tried > budget)
        throw CertificationError("cycle_pair_generators: search budget exhausted");
      Perm sigma2 = cycle_on(n, support);
      if (PermGroup(n, {sigma1, sigma2}).order() == target)
        return {sigma1, sigma2};
    } while (std::next_permutation(support.begin() + 1, support.end()));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  throw CertificationError("cycle_pair_generators: no generating pair found");
}

BigInt crt_exponent(ProductConfig const &cfg, int a, std::size_t k)
{
  if (a != 1 && a != 2)
    throw ArgumentError("crt_exponent: a must be 1 or 2");
  std::size_t const N = product_depth(cfg);
  if (k < 1 || k > N)
    throw ArgumentError("crt_exponent: k out of range");
  auto prime = [&](std::size_t i) -> std::uint64_t {
    auto const &L = cfg.levels[i - 1];
    return a == 1 ? L.p1 : L.p2;
  };
  BigInt M = 1;
  for (std::size_t i = 1; i <= N; ++i)
    if (i != k)
      M *= prime(i);
  std::uint64_t const p = prime(k);
  auto const Mp = static_cast<std::uint64_t>(M % p);
  // smallest t in [1, p] with M t = 1 (mod p)
  for (std::uint64_t t = 1; t <= p; ++t)
    if ((Mp * t) % p == 1 % p)
      return M * t;
  throw ArgumentError("crt_exponent: moduli are not coprime");
}

std::vector<std::pair<Perm, Perm>> product_level_generators(ProductConfig const &cfg)
{
  auto const verdict = validate_po(cfg);
  if (!verdict.valid)
    throw ArgumentError("invalid product config: " + verdict.violations.front());
  std::vector<std::pair<Perm, Perm>> out;
  for (std::size_t n = 0; n < product_depth(cfg); ++n) {
    auto const &L = cfg.levels[n];
    out.push_back(cycle_pair_generators(L.p1, L.p2, L.o));
  }
  return out;
}

LevelGroupSystem build_alternating_product(ProductConfig const &cfg)
{
  auto const gens = product_level_generators(cfg);
  std::vector<std::uint32_t> m;
  BigInt expected = 1;
  for (std::size_t n = 0; n < gens.size(); ++n) {
    m.push_back(cfg.levels[n].o);
    expected *= factorial(cfg.levels[n].o) / 2;
  }
  SphericalIndex tree(m);
  std::vector<Perm> s1, s2;
  for (auto const &[a, b] : gens) {
    s1.push_back(a);
    s2.push_back(b);
  }
  LevelGroupSystem sys(tree, {Portrait::from_level_perms(tree, s1),
                              Portrait::from_level_perms(tree, s2)});
  if (sys.tree_group().order() != expected)
    throw CertificationError("alternating product system: level group order differs from the product of "
                             "alternating groups");
  return sys;
}

BigInt wreath_order(WreathConfig const &cfg)
{
  std::size_t const d = wreath_depth(cfg);
  BigInt order = 1;
  for (std::size_t i = 1; i <= d; ++i)
    order *= pow_big(cfg.groups[i - 1].order(), level_size(cfg.index, i - 1));
  return order;
}

LevelGroupSystem build_wreath(WreathConfig const &cfg)
{
  std::size_t const d = wreath_depth(cfg);
  check_wreath_groups(cfg, d);
  SphericalIndex const tree = cfg.index.truncate(d);

  std::vector<Portrait> gens;
  for (std::size_t i = 1; i <= d; ++i) {
    for (auto const &s : cfg.groups[i - 1].generators()) {
      if (s.is_identity())
        continue;
      std::vector<Perm> levels;
      for (std::size_t j = 1; j <= d; ++j)
        levels.push_back(j == i ? s : Perm(tree.branching(j)));
      gens.push_back(Portrait::from_level_perms(tree, levels));
      if (i > 1) {
        VertexAddress zero;
        zero.digits.assign(i - 1, 0);
        gens.push_back(Portrait::single_vertex(tree, zero, s));
      }
    }
  }
  LevelGroupSystem sys(tree, std::move(gens));
  if (sys.tree_group().order() != wreath_order(cfg))
    throw CertificationError("wreath system: generated group is not the full wreath product");
  return sys;
}

BigInt expected_S_order(WreathConfig const &cfg, PathPrefix const &x, std::size_t n, std::size_t d)
{
  if (n >= d || d > cfg.index.depth() || cfg.groups.size() < d)
    throw ArgumentError("expected_S_order: need n < d <= depth");
  SphericalIndex const tree = cfg.index.truncate(d);
  PathPrefix const xd = path_vertex(x, d);
  BigInt s = cfg.groups[n].point_stabilizer(xd.digits[n]).order();
  for (std::size_t i = n + 1; i <= d - 1; ++i)
    s *= pow_big(cfg.groups[i].order(), residual_vertices(tree, xd, n, i).size());
  return s;
}

BigInt expected_K_order(WreathConfig const &cfg, PathPrefix const &x, std::size_t n, std::size_t d)
{
  if (n > d)
    throw ArgumentError("expected_K_order: need n <= d");
  BigInt k = 1;
  for (std::size_t i = 0; i < n; ++i)
    k *= expected_S_order(cfg, x, i, d);
  return k;
}

BigInt wreath_K_structural_count(WreathConfig const &cfg, PathPrefix const &x, std::size_t n,
                                 std::size_t d)
{
  if (n > d || d > cfg.index.depth() || cfg.groups.size() < d)
    throw ArgumentError("wreath_K_structural_count: need n <= d <= depth");
  SphericalIndex const tree = cfg.index.truncate(d);
  PathPrefix const xd = path_vertex(x, d);
  VertexAddress const xn = path_vertex(xd, n);

  BigInt count = 1;
  for (std::size_t lev = 0; lev < d; ++lev) {
    auto const &A = cfg.groups[lev];
    for (auto const &v : level_vertices(tree, lev)) {
      bool const on_path = v == path_vertex(xd, lev);
      bool const below_xn = in_cylinder(v, xn);
      if (below_xn)
        continue;  // must act trivially
      if (on_path)
        count *= A.point_stabilizer(xd.digits[lev]).order();
      else
        count *= A.order();
    }
  }
  return count;
}

BigInt product_K_structural_count(ProductConfig const &cfg, std::size_t n)
{
  if (n > product_depth(cfg))
    throw ArgumentError("product_K_structural_count: n exceeds depth");
  BigInt k = 1;
  for (std::size_t i = 0; i < n; ++i)
    k *= factorial(cfg.levels[i].o - 1) / 2;
  return k;
}

LevelGroupSystem build_odometer(std::uint32_t k, std::size_t depth)
{
  if (k < 2)
    throw ArgumentError("odometer needs at least two digits");
  SphericalIndex tree(std::vector<std::uint32_t>(depth, k));
  std::vector<Point> shift(k);
  for (Point c = 0; c < k; ++c)
    shift[c] = (c + 1) % k;
  std::vector<std::vector<Perm>> dec(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    dec[i].assign(level_size(tree, i), Perm(k));
    dec[i][0] = Perm(shift);  // carry continues only along the all-zero image
  }
  return LevelGroupSystem(tree, {Portrait(tree, std::move(dec))});
}

Portrait product_portrait(SphericalIndex const &prod, SphericalIndex const &th,
                          SphericalIndex const &tg, Portrait const *h, Portrait const *g)
{
  std::vector<std::vector<Perm>> dec(prod.depth());
  for (std::size_t i = 0; i < prod.depth(); ++i) {
    std::uint32_t const mh = i < th.depth() ? th.branching(i + 1) : 1;
    std::uint32_t const mg = i < tg.depth() ? tg.branching(i + 1) : 1;
    auto const sz = level_size(prod, i);
    dec[i].reserve(sz);
    for (std::uint64_t w = 0; w < sz; ++w) {
      auto const [ih, ig] = split_index(th, tg, vertex_at(prod, i, w));
      std::vector<Point> img(std::size_t{mh} * mg);
      for (Point a = 0; a < mh; ++a)
        for (Point b = 0; b < mg; ++b) {
          Point const a2 = (h && i < th.depth()) ? h->decoration(i, ih)(a) : a;
          Point const b2 = (g && i < tg.depth()) ? g->decoration(i, ig)(b) : b;
          img[a * mg + b] = a2 * mg + b2;
        }
      dec[i].emplace_back(std::move(img));
    }
  }
  return Portrait(prod, std::move(dec));
}

LevelGroupSystem build_product_action(LevelGroupSystem const &sysH, LevelGroupSystem const &sysG)
{
  auto const &th = sysH.tree();
  auto const &tg = sysG.tree();
  std::size_t const d = std::max(th.depth(), tg.depth());
  std::vector<std::uint32_t> m;
  for (std::size_t i = 1; i <= d; ++i) {
    std::uint32_t const mh = i <= th.depth() ? th.branching(i) : 1;
    std::uint32_t const mg = i <= tg.depth() ? tg.branching(i) : 1;
    m.push_back(mh * mg);
  }
  SphericalIndex const prod(m);
  std::vector<Portrait> gens;
  for (auto const &h : sysH.generators())
    gens.push_back(product_portrait(prod, th, tg, &h, nullptr));
  for (auto const &g : sysG.generators())
    gens.push_back(product_portrait(prod, th, tg, nullptr, &g));
  return LevelGroupSystem(prod, std::move(gens));
}

PathPrefix product_path(LevelGroupSystem const &sysH, LevelGroupSystem const &sysG,
                        PathPrefix const &x, PathPrefix const &y)
{
  auto const &th = sysH.tree();
  auto const &tg = sysG.tree();
  validate_path(th, x);
  validate_path(tg, y);
  PathPrefix p;
  for (std::size_t i = 0; i < std::max(th.depth(), tg.depth()); ++i) {
    std::uint32_t const mg = i < tg.depth() ? tg.branching(i + 1) : 1;
    Point const a = i < th.depth() ? x.digits[i] : 0;
    Point const b = i < tg.depth() ? y.digits[i] : 0;
    p.digits.push_back(a * mg + b);
  }
  return p;
}

ProductWitness product_proper_containment_witness(LevelGroupSystem const &sysH,
                                                  LevelGroupSystem const &sysG,
                                                  PathPrefix const &x, PathPrefix const &y,
                                                  std::size_t n)
{
  PermGroup const KG = stabilizer_K(sysG, y, n);
  if (KG.is_trivial())
    throw ArgumentError("product witness: K_n of the second factor is trivial at this depth");
  PermGroup const UG = cylinder_stabilizer(sysG, y, n);
  PermGroup const ZG = centralizer(KG, UG.generators());
  if (ZG.order() == KG.order())
    throw ArgumentError("product witness: K_n of the second factor centralizes its cylinder "
                        "stabilizer at this depth");

  std::optional<Perm> g, s;
  for (auto const &k : KG.generators()) {
    for (auto const &u : UG.generators())
      if (!commutes(k, u)) {
        g = k;
        s = u;
        break;
      }
    if (g)
      break;
  }
  if (!g)
    throw CertificationError("product witness: no noncommuting generator pair found");

  PermGroup const UH = cylinder_stabilizer(sysH, x, n);
  Perm const r = UH.generators().empty() ? Perm(UH.degree()) : UH.generators().front();

  ProductWitness w;
  w.g_hat = portrait_from_union_perm(sysG.tree(), *g);
  w.s_hat = portrait_from_union_perm(sysG.tree(), *s);
  w.r_hat = portrait_from_union_perm(sysH.tree(), r);

  LevelGroupSystem const P = build_product_action(sysH, sysG);
  PathPrefix const xy = product_path(sysH, sysG, x, y);
  w.k_element = product_portrait(P.tree(), sysH.tree(), sysG.tree(), nullptr, &w.g_hat);
  w.u_element = product_portrait(P.tree(), sysH.tree(), sysG.tree(), &w.r_hat, &w.s_hat);

  PermGroup const KP = stabilizer_K(P, xy, n);
  PermGroup const UP = cylinder_stabilizer(P, xy, n);
  w.k_member = KP.contains(w.k_element.union_restriction());
  w.u_member = UP.contains(w.u_element.union_restriction());
  w.noncommuting = !(w.k_element * w.u_element == w.u_element * w.k_element);
  w.k_product = KP.order();
  w.k_h = stabilizer_K(sysH, x, n).order();
  w.k_g = KG.order();
  w.order_factorizes = w.k_product == w.k_h * w.k_g;
  return w;
}

Portrait nonhausdorff_witness_construct(WreathConfig const &cfg, PathPrefix const &x,
                                        std::size_t d)
{
  if (d < 4)
    throw ArgumentError("non-Hausdorff witness needs depth at least 4");
  if (d > cfg.index.depth() || cfg.groups.size() < d)
    throw ArgumentError("non-Hausdorff witness: depth exceeds the config");
  check_wreath_groups(cfg, d);
  SphericalIndex const tree = cfg.index.truncate(d);
  PathPrefix const xd = path_vertex(x, d);
  validate_path(tree, xd);

  Portrait a(tree);
  for (std::size_t l = d % 2; l + 2 <= d; l += 2) {
    VertexAddress sib = path_vertex(xd, l);
    sib.digits.push_back((xd.digits[l] + 1) % tree.branching(l + 1));
    auto const &gens = cfg.groups[l + 1].generators();
    auto it = std::find_if(gens.begin(), gens.end(), [](Perm const &p) { return !p.is_identity(); });
    if (it == gens.end())
      throw ArgumentError("non-Hausdorff witness: level group is trivial");
    a = a * Portrait::single_vertex(tree, sib, *it);
  }
  return a;
}

ProductConfig prime_scheme(std::size_t levels)
{
  if (levels == 0)
    throw ArgumentError("prime_scheme needs at least one level");
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 3; primes.size() < 2 * levels; p += 2)
    if (is_prime(p))
      primes.push_back(p);
  ProductConfig cfg;
  for (std::size_t n = 0; n < levels; ++n) {
    std::uint32_t const p1 = primes[2 * n], p2 = primes[2 * n + 1];
    cfg.levels.push_back({p1, p2, p1 + p2 - 1});
  }
  cfg.depth = levels;
  return cfg;
}

} // namespace arboreal
