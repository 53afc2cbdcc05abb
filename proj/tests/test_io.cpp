#include <gtest/gtest.h>

#include <random>

#include "arboreal/error.hpp"
#include "arboreal/io.hpp"

using namespace arboreal;

TEST(IoTest, PortraitJsonRoundTrips)
{
  SphericalIndex const m({2, 3, 2});
  std::mt19937_64 rng(3);
  std::vector<std::vector<Perm>> dec(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::uint64_t k = 0; k < level_size(m, i); ++k) {
      std::vector<Point> img(m.branching(i + 1));
      std::iota(img.begin(), img.end(), Point{0});
      if (rng() % 2)
        std::shuffle(img.begin(), img.end(), rng);
      dec[i].emplace_back(std::move(img));
    }
  Portrait const a(m, dec);
  EXPECT_EQ(a, portrait_from_json(m, portrait_to_json(a)));
  EXPECT_TRUE(portrait_to_json(Portrait(m)).is_null());
  EXPECT_EQ(Portrait(m), portrait_from_json(m, nullptr));
}

TEST(IoTest, SparsePortraitJsonHasNullSubtrees)
{
  SphericalIndex const m({2, 2, 2});
  Portrait const a = Portrait::single_vertex(m, VertexAddress{{1, 0}}, Perm({1, 0}));
  Json const j = portrait_to_json(a);
  EXPECT_TRUE(j["children"][0].is_null());
  EXPECT_EQ((std::vector<Point>{1, 0}), j["children"][1]["children"][0]["perm"].get<std::vector<Point>>());
  EXPECT_FALSE(j["children"][1]["children"][0].contains("children"));
}

TEST(IoTest, PortraitJsonAcceptsCycleStrings)
{
  SphericalIndex const m({3});
  Json const j = Json::parse(R"j({"perm": "(0 1 2)"})j");
  EXPECT_EQ(Perm({1, 2, 0}), portrait_from_json(m, j).decoration(0, 0));
  EXPECT_THROW(portrait_from_json(m, Json::parse(R"j({"perm": [0, 1]})j")), ArgumentError);
}

TEST(IoTest, VertexJson)
{
  SphericalIndex const m({2, 3});
  VertexAddress const v{{1, 2}};
  EXPECT_EQ(v, vertex_from_json(vertex_to_json(m, v)));
  EXPECT_THROW(vertex_from_json(Json::parse(R"j({"index": [2, 2], "vertex": [1, 2]})j")),
               ArgumentError);
}

TEST(IoTest, WreathConfigBuildsAndSerializes)
{
  Json const cfg = Json::parse(
      R"j({"family": "wreath", "index": [2, 2, 2, 2], "groups": ["C2", "C2", "C2", "C2"], "depth": 4})j");
  BuiltSystem const spec = system_from_json(cfg);
  ASSERT_TRUE(spec.wreath.has_value());
  EXPECT_EQ(32768, spec.system.tree_group().order());
  Json const sys = system_to_json(spec);
  EXPECT_EQ("32768", sys["level_orders"][4].get<std::string>());
  BuiltSystem const back = system_from_json(sys);
  EXPECT_EQ("system", back.family);
  EXPECT_EQ(32768, back.system.tree_group().order());
  EXPECT_EQ(8, system_from_json(sys, 2).system.tree_group().order());
}

TEST(IoTest, WreathConfigWithExplicitGenerators)
{
  Json const cfg = Json::parse(
      R"j({"family": "wreath", "index": [3, 2], "groups": [{"generators": ["(0 1 2)", "(0 1)"]}, "C2"]})j");
  EXPECT_EQ(6 * 8, system_from_json(cfg).system.tree_group().order());
}

TEST(IoTest, ProductConfig)
{
  Json const cfg = *preset_config("theorem1-default");
  BuiltSystem const spec = system_from_json(cfg);
  ASSERT_TRUE(spec.product.has_value());
  EXPECT_EQ("186810624000", system_to_json(spec)["level_orders"][2].get<std::string>());
  Json bad = cfg;
  bad["levels"][0]["p2"] = 3;
  EXPECT_THROW(system_from_json(bad), ArgumentError);
}

TEST(IoTest, ConfigErrors)
{
  EXPECT_THROW(system_from_json(Json::parse(R"j({"family": "tower"})j")), ArgumentError);
  EXPECT_THROW(system_from_json(Json::parse(R"j({"index": [2]})j")), ArgumentError);
  EXPECT_THROW(system_from_json(Json::parse(R"j({"family": "wreath", "index": [2, 2], "groups": ["C2"]})j")),
               ArgumentError);
  EXPECT_THROW(system_from_json(Json::parse(R"j({"family": "wreath", "index": [2], "groups": ["C3"]})j")),
               ArgumentError);
}

TEST(IoTest, Presets)
{
  EXPECT_EQ(4u, preset_config("cyclic-wreath-3")->at("index").size());
  EXPECT_EQ(6u, preset_config("cyclic-wreath-2", 6)->at("depth").get<std::size_t>());
  EXPECT_EQ("A5", preset_config("alt-wreath")->at("groups")[1].get<std::string>());
  EXPECT_EQ("odometer", preset_config("odometer-2")->at("family").get<std::string>());
  EXPECT_FALSE(preset_config("cyclic-wreath-").has_value());
  EXPECT_FALSE(preset_config("nosuch").has_value());
}

TEST(IoTest, ReportRoundTripsAndIsDeterministic)
{
  BuiltSystem const spec = system_from_json(*preset_config("cyclic-wreath-2"));
  ChainReport const r = chain_report(spec.system, PathPrefix{{0, 0, 0, 0}}, 2, 2);
  std::string const a = report_to_json(r).dump(2);
  ChainReport const r2 = chain_report(spec.system, PathPrefix{{0, 0, 0, 0}}, 2, 2);
  EXPECT_EQ(a, report_to_json(r2).dump(2));
  ChainReport const back = report_from_json(Json::parse(a));
  EXPECT_EQ(a, report_to_json(back).dump(2));
  EXPECT_EQ("128", report_to_json(r)["rows"][1]["k_order"].get<std::string>());

  std::string const csv = report_to_csv(r);
  EXPECT_EQ(0u, csv.find("depth,buffer,n,k_order"));
  EXPECT_NE(std::string::npos, csv.find("\n4,2,1,128,"));
}

TEST(IoTest, DigestIsStable)
{
  // FNV-1a 64 reference values
  EXPECT_EQ("cbf29ce484222325", digest(""));
  EXPECT_EQ("af63dc4c8601ec8c", digest("a"));
  EXPECT_NE(digest("ab"), digest("ba"));
}
