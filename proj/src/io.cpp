#include "arboreal/io.hpp"

#include <cstdio>
#include <sstream>

#include "arboreal/error.hpp"

namespace arboreal {

namespace {

Json perm_json(Perm const &p)
{
  return Json(std::vector<Point>(p.images().begin(), p.images().end()));
}

Perm perm_from_json(Json const &j, std::size_t degree)
{
  if (j.is_string())
    return Perm::parse(j.get<std::string>(), degree);
  if (!j.is_array())
    throw ArgumentError("permutation must be an image list or a string");
  Perm p(j.get<std::vector<Point>>());
  if (p.degree() != degree)
    throw ArgumentError("permutation has the wrong degree");
  return p;
}

Json node_json(Portrait const &a, std::size_t level, std::uint64_t index,
               std::vector<std::vector<char>> const &trivial)
{
  if (trivial[level][index])
    return nullptr;
  Json node;
  node["perm"] = perm_json(a.decoration(level, index));
  if (level + 1 < a.depth()) {
    Json kids = Json::array();
    std::uint32_t const m = a.tree().branching(level + 1);
    for (std::uint32_t c = 0; c < m; ++c)
      kids.push_back(node_json(a, level + 1, index * m + c, trivial));
    node["children"] = std::move(kids);
  }
  return node;
}

void read_node(SphericalIndex const &tree, Json const &j, std::size_t level, std::uint64_t index,
               std::vector<std::vector<Perm>> &dec)
{
  if (j.is_null())
    return;
  if (level >= tree.depth())
    throw ArgumentError("portrait JSON is deeper than the tree");
  std::uint32_t const m = tree.branching(level + 1);
  dec[level][index] = perm_from_json(j.at("perm"), m);
  if (j.contains("children")) {
    auto const &kids = j.at("children");
    if (!kids.is_array() || (kids.size() != m && !kids.empty()))
      throw ArgumentError("portrait JSON node has the wrong number of children");
    for (std::uint32_t c = 0; c < kids.size(); ++c)
      read_node(tree, kids[c], level + 1, index * m + c, dec);
  }
}

SphericalIndex index_from_json(Json const &j)
{
  return SphericalIndex(j.get<std::vector<std::uint32_t>>());
}

PermGroup group_from_json(Json const &j, std::size_t degree, std::string &name)
{
  if (j.is_string()) {
    name = j.get<std::string>();
    return named_group(name, degree);
  }
  std::vector<Perm> gens;
  for (auto const &g : j.at("generators"))
    gens.push_back(perm_from_json(g, degree));
  name.clear();
  return PermGroup(degree, std::move(gens));
}

std::size_t json_depth(Json const &j)
{
  return j.contains("depth") ? j.at("depth").get<std::size_t>() : 0;
}

} // namespace

Json portrait_to_json(Portrait const &a)
{
  std::size_t const d = a.depth();
  if (d == 0)
    return nullptr;
  // trivial[i][k]: decorations at vertex k of level i and below are all identity
  std::vector<std::vector<char>> trivial(d);
  for (std::size_t i = d; i-- > 0;) {
    auto const sz = level_size(a.tree(), i);
    trivial[i].resize(sz);
    std::uint32_t const m = a.tree().branching(i + 1);
    for (std::uint64_t k = 0; k < sz; ++k) {
      bool t = a.decoration(i, k).is_identity();
      if (i + 1 < d)
        for (std::uint32_t c = 0; c < m && t; ++c)
          t = trivial[i + 1][k * m + c] != 0;
      trivial[i][k] = t;
    }
  }
  return node_json(a, 0, 0, trivial);
}

Portrait portrait_from_json(SphericalIndex const &tree, Json const &j)
{
  Portrait id(tree);
  auto dec = id.decorations();
  if (tree.depth() > 0)
    read_node(tree, j, 0, 0, dec);
  return Portrait(tree, std::move(dec));
}

Json vertex_to_json(SphericalIndex const &m, VertexAddress const &v)
{
  validate(m, v);
  return Json{{"index", m.entries()}, {"vertex", v.digits}};
}

VertexAddress vertex_from_json(Json const &j)
{
  VertexAddress v;
  v.digits = j.at("vertex").get<std::vector<Point>>();
  if (j.contains("index"))
    validate(index_from_json(j.at("index")), v);
  return v;
}

std::optional<Json> preset_config(std::string const &name, std::size_t depth)
{
  auto suffix_number = [&](std::string const &prefix) -> std::optional<std::uint32_t> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size())
      return std::nullopt;
    std::string const num = name.substr(prefix.size());
    if (num.find_first_not_of("0123456789") != std::string::npos || num.size() > 6)
      return std::nullopt;
    return static_cast<std::uint32_t>(std::stoul(num));
  };

  if (name == "theorem1-default") {
    Json j{{"family", "product"},
           {"levels", Json::array({Json{{"p1", 3}, {"p2", 5}, {"o", 5}},
                                   Json{{"p1", 7}, {"p2", 11}, {"o", 13}}})},
           {"depth", 2}};
    if (depth)
      j["depth"] = depth;
    return j;
  }
  if (name == "alt-wreath") {
    std::size_t const d = depth ? depth : 2;
    return Json{{"family", "wreath"},
                {"index", std::vector<std::uint32_t>(d, 5)},
                {"groups", std::vector<std::string>(d, "A5")},
                {"depth", d}};
  }
  if (auto k = suffix_number("cyclic-wreath-")) {
    std::size_t const d = depth ? depth : 4;
    return Json{{"family", "wreath"},
                {"index", std::vector<std::uint32_t>(d, *k)},
                {"groups", std::vector<std::string>(d, "C" + std::to_string(*k))},
                {"depth", d}};
  }
  if (auto k = suffix_number("odometer-")) {
    std::size_t const d = depth ? depth : 4;
    return Json{{"family", "odometer"}, {"base", *k}, {"depth", d}};
  }
  return std::nullopt;
}

BuiltSystem system_from_json(Json const &j, std::size_t depth_override)
{
  BuiltSystem spec;
  try {
    spec.family = j.at("family").get<std::string>();
    if (spec.family == "product") {
      ProductConfig cfg;
      for (auto const &L : j.at("levels"))
        cfg.levels.push_back({L.at("p1").get<std::uint32_t>(), L.at("p2").get<std::uint32_t>(),
                              L.at("o").get<std::uint32_t>()});
      cfg.depth = depth_override ? depth_override : json_depth(j);
      auto const verdict = validate_po(cfg);
      if (!verdict.valid) {
        std::string msg = "invalid product config:";
        for (auto const &v : verdict.violations)
          msg += " " + v + ";";
        throw ArgumentError(msg);
      }
      spec.system = build_alternating_product(cfg);
      spec.product = cfg;
    } else if (spec.family == "wreath") {
      WreathConfig cfg;
      cfg.index = index_from_json(j.at("index"));
      auto const &groups = j.at("groups");
      if (groups.size() != cfg.index.depth())
        throw ArgumentError("wreath config needs one group per level");
      for (std::size_t i = 0; i < groups.size(); ++i) {
        std::string name;
        cfg.groups.push_back(group_from_json(groups[i], cfg.index.branching(i + 1), name));
        cfg.group_names.push_back(name);
      }
      cfg.depth = depth_override ? depth_override : json_depth(j);
      spec.system = build_wreath(cfg);
      spec.wreath = cfg;
    } else if (spec.family == "odometer") {
      spec.odometer_base = j.at("base").get<std::uint32_t>();
      std::size_t const d = depth_override ? depth_override : json_depth(j);
      spec.system = build_odometer(spec.odometer_base, d);
    } else if (spec.family == "system") {
      SphericalIndex const tree = index_from_json(j.at("index"));
      std::vector<Portrait> gens;
      for (auto const &g : j.at("generators"))
        gens.push_back(portrait_from_json(tree, g));
      LevelGroupSystem sys(tree, std::move(gens));
      if (depth_override) {
        if (depth_override > tree.depth())
          throw ArgumentError("requested depth exceeds the stored system");
        sys = sys.truncate(depth_override);
      }
      spec.system = std::move(sys);
    } else {
      throw ArgumentError("unknown family: " + spec.family);
    }
  } catch (Json::exception const &e) {
    throw ArgumentError(std::string("malformed config: ") + e.what());
  }
  return spec;
}

Json system_to_json(BuiltSystem const &spec)
{
  auto const &sys = spec.system;
  Json j;
  j["family"] = "system";
  j["source_family"] = spec.family;
  j["index"] = sys.tree().entries();
  j["depth"] = sys.depth();
  Json gens = Json::array();
  for (auto const &g : sys.generators())
    gens.push_back(portrait_to_json(g));
  j["generators"] = std::move(gens);
  Json orders = Json::array();
  for (std::size_t n = 0; n <= sys.depth(); ++n)
    orders.push_back(to_decimal(sys.level_group(n).order()));
  j["level_orders"] = std::move(orders);
  return j;
}

Json report_to_json(ChainReport const &r)
{
  Json rows = Json::array();
  for (auto const &row : r.rows)
    rows.push_back(Json{{"n", row.n},
                        {"k_order", to_decimal(row.k_order)},
                        {"z_upper_order", to_decimal(row.z_upper_order)},
                        {"flags",
                         {{"z_equals_k", row.flags.z_equals_k},
                          {"z_proper", row.flags.z_proper},
                          {"z_kernel_certificate", row.flags.z_kernel_certificate},
                          {"k_grew", row.flags.k_grew}}}});
  auto const &f = r.flags;
  return Json{{"depth", r.depth},
              {"buffer", r.buffer},
              {"path", r.path.digits},
              {"rows", std::move(rows)},
              {"flags",
               {{"wild_evidence", f.wild_evidence},
                {"stable_evidence", f.stable_evidence},
                {"finite_type_evidence", f.finite_type_evidence},
                {"flat_type_evidence", f.flat_type_evidence},
                {"dynamically_wild_evidence", f.dynamically_wild_evidence},
                {"algebraically_stable_evidence", f.algebraically_stable_evidence}}},
              {"horizon_caveat", r.horizon_caveat}};
}

ChainReport report_from_json(Json const &j)
{
  ChainReport r;
  try {
    r.depth = j.at("depth").get<std::size_t>();
    r.buffer = j.value("buffer", std::size_t{0});
    r.path.digits = j.at("path").get<std::vector<Point>>();
    for (auto const &row : j.at("rows")) {
      ChainRow c;
      c.n = row.at("n").get<std::size_t>();
      c.k_order = BigInt(row.at("k_order").get<std::string>());
      c.z_upper_order = BigInt(row.at("z_upper_order").get<std::string>());
      if (row.contains("flags")) {
        auto const &f = row.at("flags");
        c.flags.z_equals_k = f.value("z_equals_k", false);
        c.flags.z_proper = f.value("z_proper", false);
        c.flags.z_kernel_certificate = f.value("z_kernel_certificate", false);
        c.flags.k_grew = f.value("k_grew", false);
      }
      r.rows.push_back(std::move(c));
    }
    r.horizon_caveat = j.value("horizon_caveat", std::string{});
  } catch (Json::exception const &e) {
    throw ArgumentError(std::string("malformed report: ") + e.what());
  } catch (std::runtime_error const &e) {
    throw ArgumentError(std::string("malformed report: ") + e.what());
  }
  r.flags = classify_flags(r);
  return r;
}

std::string report_to_csv(ChainReport const &r)
{
  std::ostringstream os;
  os << "depth,buffer,n,k_order,z_upper_order,z_equals_k,z_proper,z_kernel_certificate,k_grew\n";
  for (auto const &row : r.rows)
    os << r.depth << ',' << r.buffer << ',' << row.n << ',' << row.k_order << ','
       << row.z_upper_order << ',' << row.flags.z_equals_k << ',' << row.flags.z_proper << ','
       << row.flags.z_kernel_certificate << ',' << row.flags.k_grew << '\n';
  return os.str();
}

std::string digest(std::string const &bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace arboreal
