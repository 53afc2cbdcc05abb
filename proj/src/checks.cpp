#include "arboreal/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "arboreal/classify.hpp"
#include "arboreal/constructions.hpp"
#include "arboreal/error.hpp"
#include "arboreal/oracle.hpp"

namespace arboreal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failed expectations and a short trace of observed values.
class Tally {
public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, std::string const &what)
  {
    if (!ok) {
      ++failures_;
      note("FAILED " + what);
    }
  }

  void note(std::string const &text)
  {
    if (!result_.detail.empty())
      result_.detail += "; ";
    result_.detail += text;
  }

  CheckResult finish()
  {
    result_.passed = failures_ == 0;
    return result_;
  }

private:
  CheckResult result_;
  std::size_t failures_ = 0;
};

ProductConfig default_product()
{
  return ProductConfig{{{3, 5, 5}, {7, 11, 13}}, 2};
}

WreathConfig binary_wreath(std::size_t d)
{
  WreathConfig cfg;
  cfg.index = SphericalIndex(std::vector<std::uint32_t>(d, 2));
  cfg.groups.assign(d, PermGroup::cyclic(2));
  cfg.group_names.assign(d, "C2");
  cfg.depth = d;
  return cfg;
}

PathPrefix zero_path(std::size_t d)
{
  PathPrefix x;
  x.digits.assign(d, 0);
  return x;
}

std::string str(BigInt const &x)
{
  return to_decimal(x);
}

/// Runs the non-commuting witness recipe on g (image list, g(x) = x, g != id)
/// and reports whether g tau (y) = y != tau g (y) with tau(x) = x.
bool witness_holds(std::span<Point const> g, Point x)
{
  auto const n = static_cast<Point>(g.size());
  Point y = 0;
  while (y < n && g[y] == y)
    ++y;
  if (y == n)
    return false;
  Point ginv_y = 0;
  while (g[ginv_y] != y)
    ++ginv_y;
  Point const gy = g[y];
  Point u = 0;
  while (u < n && (u == x || u == y || u == gy || u == ginv_y))
    ++u;
  if (u == n)
    return false;
  // tau = (y ginv_y u)
  auto tau = [&](Point p) { return p == y ? ginv_y : p == ginv_y ? u : p == u ? y : p; };
  if (tau(x) != x)
    return false;
  return g[tau(y)] == y && tau(g[y]) != y;
}

/// Applies witness_holds to every nontrivial element of D, split across threads
/// by the cosets of the first basic stabilizer. Returns the number of elements
/// for which the witness was confirmed.
std::uint64_t sweep_witnesses(PermGroup const &D, Point x, std::uint64_t &failures)
{
  std::atomic<std::uint64_t> confirmed{0}, failed{0};
  if (D.levels().empty())
    return 0;
  auto const &top = D.levels().front();
  Point const b0 = top.base;
  PermGroup const H = D.point_stabilizer(b0);
  std::size_t const reps = top.transversal.size();
  unsigned const workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(reps)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    std::uint64_t ok = 0, bad = 0;
    std::vector<Point> g(D.degree());
    for (std::size_t r; (r = next.fetch_add(1)) < reps;) {
      auto const t = top.transversal[r].images();
      H.for_each_element([&](std::span<Point const> h) {
        bool trivial = true;
        for (std::size_t p = 0; p < g.size(); ++p) {
          g[p] = t[h[p]];
          trivial = trivial && g[p] == p;
        }
        if (trivial)
          return;
        if (witness_holds(g, x))
          ++ok;
        else
          ++bad;
      });
    }
    confirmed += ok;
    failed += bad;
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < workers; ++i)
    pool.emplace_back(work);
  pool.clear();
  failures = failed;
  return confirmed;
}

} // namespace

CheckResult check_product_order()
{
  Tally t("level-group order of (3,5,o=5),(7,11,o=13)");
  auto const t0 = Clock::now();
  auto const cfg = default_product();
  for (auto const &[s1, s2] : product_level_generators(cfg)) {
    auto const o1 = order_and_parity(s1), o2 = order_and_parity(s2);
    t.expect(o1.parity == Parity::even && o2.parity == Parity::even, "generators are even");
  }
  LevelGroupSystem const sys = build_alternating_product(cfg);
  BigInt const order = sys.level_group(2).order();
  BigInt const expected = (factorial(5) / 2) * (factorial(13) / 2);
  double const elapsed = seconds_since(t0);
  t.note("order " + str(order) + ", expected " + str(expected));
  t.expect(order == expected, "order equals (5!/2)(13!/2)");
  t.expect(sys.level_group(1).order() == 60, "level-1 group is Alt(5)");
  t.expect(elapsed < 5.0, "runtime under 5 s");
  return t.finish();
}

CheckResult check_crt_isolation()
{
  Tally t("CRT isolation of generator powers");
  auto const cfg = default_product();
  auto const gens = product_level_generators(cfg);
  LevelGroupSystem const sys = build_alternating_product(cfg);
  for (int a = 1; a <= 2; ++a) {
    Perm const top = sys.generators()[a - 1].level_restriction(2);
    for (std::size_t k = 1; k <= 2; ++k) {
      BigInt const s = crt_exponent(cfg, a, k);
      Perm const pw = power(top, s);
      Perm const sigma_k = a == 1 ? gens[k - 1].first : gens[k - 1].second;
      Perm const expected = k == 1 ? product_perm(sigma_k, Perm(13)) : product_perm(Perm(5), sigma_k);
      t.note("s(" + std::to_string(a) + "," + std::to_string(k) + ") = " + str(s));
      t.expect(pw == expected, "power isolates coordinate " + std::to_string(k));
    }
  }
  return t.finish();
}

CheckResult check_centralizer_triviality()
{
  Tally t("trivial centralizer of K_n at depth 2");
  auto const t0 = Clock::now();
  auto const cfg = default_product();
  LevelGroupSystem const sys = build_alternating_product(cfg);
  PathPrefix const x = zero_path(2);

  BigInt const k1 = stabilizer_K(sys, x, 1).order();
  BigInt const k2 = stabilizer_K(sys, x, 2).order();
  t.note("|K_1| = " + str(k1) + ", |K_2| = " + str(k2));
  t.expect(k1 == 12 && product_K_structural_count(cfg, 1) == 12, "|K_1| = 12");
  BigInt const k2_expected = 12 * (factorial(12) / 2);
  t.expect(k2 == k2_expected && product_K_structural_count(cfg, 2) == k2_expected,
           "|K_2| = 12 (12!/2)");

  // brute force at the reduced config
  ProductConfig const small{{{3, 5, 5}}, 1};
  LevelGroupSystem const sys1 = build_alternating_product(small);
  auto const &G1 = sys1.tree_group();
  EnumeratedGroup const E(G1.degree(), G1.generators());
  PathPrefix const x1 = zero_path(1);
  auto pts = path_points(sys1.tree(), x1, 1);
  auto const sub = subtree_points(sys1.tree(), x1);
  pts.insert(pts.end(), sub.begin(), sub.end());
  auto const brute = E.pointwise_stabilizer(pts).size();
  t.note("reduced brute force |K_1| = " + std::to_string(brute));
  t.expect(brute == 12 && stabilizer_K(sys1, x1, 1).order() == 12, "reduced |K_1| = 12");

  // K_n is the direct product of the coordinate groups D_i = Alt(o_i)_{x_i};
  // a non-commuting witness in one nontrivial coordinate lifts to U_n.
  for (std::size_t n = 1; n <= 2; ++n) {
    BigInt coords = 1;
    for (std::size_t i = 0; i < n; ++i)
      coords *= PermGroup::alternating(cfg.levels[i].o).point_stabilizer(x.digits[i]).order();
    t.expect(coords == stabilizer_K(sys, x, n).order(), "K_" + std::to_string(n) +
                                                            " is the product of coordinate groups");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    std::uint32_t const o = cfg.levels[i].o;
    Point const xi = x.digits[i];
    PermGroup const D = PermGroup::alternating(o).point_stabilizer(xi);
    std::uint64_t failures = 0;
    std::uint64_t const confirmed = sweep_witnesses(D, xi, failures);
    t.note("coordinate " + std::to_string(i + 1) + ": " + std::to_string(confirmed) +
           " witnesses");
    t.expect(failures == 0 && BigInt(confirmed) + 1 == D.order(),
             "witness for every nontrivial element of coordinate " + std::to_string(i + 1));
  }

  // the lifted witnesses lie in U_2: spot-check one lift per coordinate
  PermGroup const U = cylinder_stabilizer(sys, x, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    Perm const g = i == 0 ? Perm::from_cycles(5, {{1, 2, 3}}) : Perm::from_cycles(13, {{1, 2, 3}});
    Perm const tau = noncommuting_stabilizer_witness(g.degree(), g, 0);
    std::vector<Perm> levels{Perm(5), Perm(13)};
    levels[i] = tau;
    Portrait const lift = Portrait::from_level_perms(sys.tree(), levels);
    t.expect(U.contains(lift.union_restriction()), "lifted witness lies in U_2");
  }

  for (std::size_t n = 0; n <= 2; ++n)
    t.expect(centralizer_Z_upper(sys, x, n).order() == 1,
             "Z_upper trivial at n = " + std::to_string(n));
  double const elapsed = seconds_since(t0);
  t.expect(elapsed < 30.0, "runtime under 30 s");
  return t.finish();
}

CheckResult check_primitivity()
{
  Tally t("primitivity of Alt(3..12)");
  for (std::size_t n = 3; n <= 12; ++n)
    t.expect(PermGroup::alternating(n).is_primitive().primitive,
             "Alt(" + std::to_string(n) + ") primitive");
  PermGroup const C4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto const r = C4.is_primitive();
  t.expect(!r.primitive && r.blocks.has_value(), "<(0 1 2 3)> imprimitive");
  if (r.blocks) {
    auto const &blocks = *r.blocks;
    std::vector<int> block_of(4, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (Point p : blocks[b]) {
        t.expect(p < 4 && block_of[p] == -1, "blocks are disjoint");
        if (p < 4)
          block_of[p] = static_cast<int>(b);
      }
    t.expect(std::none_of(block_of.begin(), block_of.end(), [](int b) { return b < 0; }),
             "blocks cover the points");
    t.expect(blocks.size() > 1 && blocks.size() < 4, "block system is nontrivial");
    for (auto const &g : C4.generators())
      for (auto const &B : blocks)
        for (Point p : B)
          t.expect(block_of[g(p)] == block_of[g(B.front())], "generators permute blocks");
    std::ostringstream os;
    for (auto const &B : blocks) {
      os << "{";
      for (std::size_t i = 0; i < B.size(); ++i)
        os << (i ? "," : "") << B[i];
      os << "}";
    }
    t.note("blocks " + os.str());
  }
  return t.finish();
}

CheckResult check_wreath_k_orders()
{
  Tally t("K_n orders of the binary wreath product");
  auto const t0 = Clock::now();
  auto const cfg4 = binary_wreath(4);
  LevelGroupSystem const sys = build_wreath(cfg4);
  PathPrefix const x = zero_path(4);
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());
  t.expect(E.order() == 32768, "enumeration finds 32768 elements");
  auto pts = path_points(sys.tree(), x, 1);
  auto const sub = subtree_points(sys.tree(), path_vertex(x, 1));
  pts.insert(pts.end(), sub.begin(), sub.end());
  auto const brute = E.pointwise_stabilizer(pts).size();
  BigInt const expected = expected_K_order(cfg4, x, 1, 4);
  t.note("brute |K_1| = " + std::to_string(brute) + ", formula " + str(expected));
  t.expect(BigInt(brute) == expected && expected == 128, "brute-force |K_1| = 128");
  t.expect(stabilizer_K(sys, x, 1).order() == expected, "stabilizer chain agrees");

  auto const cfg5 = binary_wreath(5);
  PathPrefix const x5 = zero_path(5);
  for (std::size_t n = 1; n <= 2; ++n) {
    BigInt const s = wreath_K_structural_count(cfg5, x5, n, 5);
    BigInt const f = expected_K_order(cfg5, x5, n, 5);
    t.note("depth 5, n = " + std::to_string(n) + ": structural " + str(s) + ", formula " + str(f));
    t.expect(s == f, "structural count matches formula at n = " + std::to_string(n));
  }
  t.expect(seconds_since(t0) < 60.0, "runtime under 60 s");
  return t.finish();
}

CheckResult check_wreath_z_kernel()
{
  Tally t("centralizer kernel certificate at depth 4");
  auto const cfg = binary_wreath(4);
  LevelGroupSystem const sys = build_wreath(cfg);
  PathPrefix const x = zero_path(4);
  auto const &tree = sys.tree();
  auto const &G = sys.tree_group();
  EnumeratedGroup const E(G.degree(), G.generators());

  auto const u_pts = path_points(tree, x, 1);
  auto k_pts = u_pts;
  auto const sub = subtree_points(tree, path_vertex(x, 1));
  k_pts.insert(k_pts.end(), sub.begin(), sub.end());
  auto const K = E.pointwise_stabilizer(k_pts);
  auto const U = E.pointwise_stabilizer(u_pts);
  auto const Z = EnumeratedGroup::centralizing(K, U);
  t.note("|K_1| = " + std::to_string(K.size()) + ", |U_1| = " + std::to_string(U.size()) +
         ", |Z| = " + std::to_string(Z.size()));
  t.expect(!Z.empty(), "centralizer contains the identity");
  for (auto const &z : Z)
    t.expect(restrict_to_level(tree, z, 3).is_identity(), "element " + z.cycle_str() +
                                                            " acts trivially on V_3");
  t.expect(BigInt(Z.size()) == centralizer_Z_upper(sys, x, 1).order(),
           "backtrack centralizer agrees with brute force");
  return t.finish();
}

CheckResult check_nonhausdorff()
{
  Tally t("non-Hausdorff witness");
  std::size_t const d = 6;
  auto const cfg = binary_wreath(d);
  PathPrefix const x = zero_path(d);
  Portrait const w = nonhausdorff_witness_construct(cfg, x, d);
  t.expect(w.apply(x) == x, "witness fixes the path");
  auto const verdict = non_hausdorff_check(w, x);
  t.expect(verdict.levels.size() == d - 1, "levels 0..4 checked");
  for (auto const &lv : verdict.levels)
    t.expect(lv.moves_in_cylinder && lv.fixed_subtree_in_cylinder,
             "witness passes at level " + std::to_string(lv.level));
  t.expect(verdict.witness_consistent, "witness consistent");
  t.note("witness passes at levels 0.." + std::to_string(verdict.levels.size() - 1));

  auto const id = non_hausdorff_check(Portrait(cfg.index), x);
  for (auto const &lv : id.levels)
    t.expect(!lv.moves_in_cylinder, "identity fails the moving condition at level " +
                                        std::to_string(lv.level));
  t.expect(!id.witness_consistent, "identity is not a witness");

  // every vertex decorated by a transposition fixing digit 0; on a binary
  // tree the sibling leaf of x_d is always fixed, so a wider tree is used
  SphericalIndex const ternary(std::vector<std::uint32_t>(d, 3));
  Portrait const full =
      Portrait::from_level_perms(ternary, std::vector<Perm>(d, Perm::from_cycles(3, {{1, 2}})));
  auto const fv = non_hausdorff_check(full, x);
  for (auto const &lv : fv.levels) {
    t.expect(lv.moves_in_cylinder, "fully decorated portrait moves at level " +
                                       std::to_string(lv.level));
    t.expect(!lv.fixed_subtree_in_cylinder, "fully decorated portrait fails the fixed-subtree "
                                            "condition at level " + std::to_string(lv.level));
  }
  t.expect(!fv.witness_consistent, "fully decorated portrait is not a witness");
  return t.finish();
}

CheckResult check_product_witness()
{
  Tally t("proper containment in the product");
  std::size_t const d = 5;
  LevelGroupSystem const H = build_odometer(2, d);
  LevelGroupSystem const G = build_wreath(binary_wreath(d));
  PathPrefix const x = zero_path(d);
  auto const w = product_proper_containment_witness(H, G, x, x, 1);
  t.note("|K_1| product " + str(w.k_product) + " = " + str(w.k_h) + " * " + str(w.k_g));
  t.expect(w.k_member, "witness lies in K_1 of the product");
  t.expect(w.u_member, "partner lies in U_1 of the product");
  t.expect(w.noncommuting, "witness does not commute with its partner");
  t.expect(w.order_factorizes && w.k_product == w.k_h * w.k_g, "|K_1| factorizes");
  t.expect(w.verified(), "witness verified");
  return t.finish();
}

CheckResult check_metric()
{
  Tally t("ultrametric axioms");
  std::vector<SphericalIndex> const shapes{
      SphericalIndex(std::vector<std::uint32_t>(12, 2)), SphericalIndex({3, 5, 2, 7}),
      SphericalIndex(std::vector<std::uint32_t>(8, 5)), SphericalIndex({2, 3, 2, 3, 2, 3, 2, 3, 2, 3})};
  std::mt19937_64 rng(0x5eed5eedull);
  std::size_t const triples = 10000;
  std::uint64_t checked = 0;
  for (auto const &m : shapes) {
    auto random_path = [&] {
      PathPrefix p;
      for (std::size_t i = 1; i <= m.depth(); ++i)
        p.digits.push_back(static_cast<Point>(rng() % m.branching(i)));
      return p;
    };
    // perturb below a random level so that long common prefixes are frequent
    auto near = [&](PathPrefix p) {
      std::size_t const from = rng() % (m.depth() + 1);
      for (std::size_t i = from; i < m.depth(); ++i)
        if (rng() % 2)
          p.digits[i] = static_cast<Point>(rng() % m.branching(i + 1));
      return p;
    };
    boost::rational<std::int64_t> const zero(0);
    std::size_t bad_sym = 0, bad_id = 0, bad_tri = 0;
    for (std::size_t k = 0; k < triples; ++k) {
      PathPrefix const p = random_path();
      PathPrefix const q = near(p);
      PathPrefix const r = k % 3 == 0 ? random_path() : near(q);
      auto const pq = metric(m, p, q), qp = metric(m, q, p);
      auto const qr = metric(m, q, r), pr = metric(m, p, r);
      bad_sym += pq != qp;
      bad_id += (pq == zero) != (p == q);
      bad_id += metric(m, p, p) != zero;
      bad_tri += pr > std::max(pq, qr);
      ++checked;
    }
    t.expect(bad_sym == 0, "symmetry on " + std::to_string(m.depth()) + "-level shape");
    t.expect(bad_id == 0, "identity of indiscernibles on " + std::to_string(m.depth()) +
                              "-level shape");
    t.expect(bad_tri == 0, "strong triangle inequality on " + std::to_string(m.depth()) +
                               "-level shape");
  }
  t.note(std::to_string(checked) + " triples");
  return t.finish();
}

CheckResult check_perm_oracle()
{
  Tally t("stabilizer chain against enumeration");
  auto const t0 = Clock::now();
  std::mt19937_64 rng(0x0dd5ca1eull);
  auto random_perm = [&](std::size_t n) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
  };
  std::uint64_t const cap = 100000;
  std::size_t accepted = 0, attempts = 0, largest = 0;
  while (accepted < 50) {
    ++attempts;
    std::size_t const n = 3 + rng() % 7;
    std::size_t const k = 1 + rng() % 3;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back(random_perm(n));
    std::optional<EnumeratedGroup> E;
    try {
      E.emplace(n, gens, cap);
    } catch (BudgetExceeded const &) {
      continue;
    }
    ++accepted;
    largest = std::max<std::size_t>(largest, E->order());
    PermGroup const G(n, gens);
    std::string const tag = " for set " + std::to_string(accepted);
    t.expect(G.order() == E->order(), "order" + tag);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < 200; ++i) {
      Perm const g = i % 2 ? random_perm(n) : E->elements()[rng() % E->order()];
      mismatches += G.contains(g) != E->contains(g);
    }
    t.expect(mismatches == 0, "contains" + tag);
    for (Point p = 0; p < n; ++p) {
      PermGroup const S = G.point_stabilizer(p);
      Point const pt[] = {p};
      auto const brute = E->pointwise_stabilizer(pt);
      bool same = S.order() == brute.size();
      for (auto const &h : brute)
        same = same && S.contains(h);
      t.expect(same, "point_stabilizer(" + std::to_string(p) + ")" + tag);
    }
  }
  double const elapsed = seconds_since(t0);
  t.note(std::to_string(accepted) + " sets from " + std::to_string(attempts) +
         " draws, largest order " + std::to_string(largest));
  t.expect(elapsed < 60.0, "runtime under 60 s");
  return t.finish();
}

std::vector<Suite> const &suites()
{
  static std::vector<Suite> const all{
      {"lemma41", {{"product order", check_product_order}, {"crt isolation", check_crt_isolation}}},
      {"prop46", {{"centralizer triviality", check_centralizer_triviality}}},
      {"primitivity", {{"primitivity", check_primitivity}}},
      {"wreath-kn", {{"wreath K orders", check_wreath_k_orders}}},
      {"wreath-z-kernel", {{"wreath Z kernel", check_wreath_z_kernel}}},
      {"nonhausdorff", {{"non-Hausdorff witness", check_nonhausdorff}}},
      {"product-witness", {{"product witness", check_product_witness}}},
      {"metric", {{"metric", check_metric}}},
      {"perm-oracle", {{"permutation oracle", check_perm_oracle}}},
  };
  return all;
}

CheckResult run_check(Check const &check)
{
  auto const t0 = Clock::now();
  CheckResult r;
  try {
    r = check.run();
  } catch (std::exception const &e) {
    r.name = check.name;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CheckResult> run_suite(std::string const &name)
{
  auto const &all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](Suite const &s) { return s.name == name; });
  if (it == all.end())
    throw ArgumentError("unknown suite: " + name);
  std::vector<CheckResult> out;
  for (auto const &c : it->checks)
    out.push_back(run_check(c));
  return out;
}

} // namespace arboreal
