#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arboreal/checks.hpp"
#include "arboreal/error.hpp"
#include "arboreal/io.hpp"

namespace arboreal {

namespace {

constexpr char const *tool_version = "1.0.0";

enum Exit { ok = 0, check_failed = 1, usage = 2, certification = 3 };

struct Options {
  std::string config;
  std::string out;
  std::string path;
  std::string suite;
  std::string format = "json";
  std::size_t n_max = 0;
  bool n_max_set = false;
  std::size_t depth = 0;
  std::size_t buffer = 2;
};

struct LoadedConfig {
  Json json;
  std::string bytes;
};

LoadedConfig load_config(std::string const &arg, std::size_t depth)
{
  if (arg.empty())
    throw ArgumentError("--config is required");
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    LoadedConfig c{{}, ss.str()};
    try {
      c.json = Json::parse(c.bytes);
    } catch (Json::parse_error const &e) {
      throw ArgumentError(std::string("malformed JSON in ") + arg + ": " + e.what());
    }
    return c;
  }
  if (auto preset = preset_config(arg, depth))
    return {*preset, preset->dump()};
  throw ArgumentError("no config file or preset named " + arg);
}

void emit(Options const &opt, std::string const &text, std::ostream &out)
{
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f)
    throw ArgumentError("cannot write " + opt.out);
  f << text;
}

Json orders_json(LevelGroupSystem const &sys)
{
  Json orders = Json::array();
  for (std::size_t n = 0; n <= sys.depth(); ++n)
    orders.push_back(to_decimal(sys.level_group(n).order()));
  return orders;
}

int cmd_build(Options const &opt, std::ostream &out)
{
  auto const cfg = load_config(opt.config, opt.depth);
  BuiltSystem const spec = system_from_json(cfg.json, opt.depth);
  std::string const body = system_to_json(spec).dump(2) + "\n";
  Json manifest{{"command", "build"},
                {"tool_version", tool_version},
                {"config_digest", digest(cfg.bytes)},
                {"depth", spec.system.depth()},
                {"level_orders", orders_json(spec.system)},
                {"output_digest", digest(body)}};
  if (opt.out.empty()) {
    out << body;
  } else {
    emit(opt, body, out);
    out << manifest.dump(2) << "\n";
  }
  return ok;
}

int cmd_diagnose(Options const &opt, std::ostream &out)
{
  auto const t0 = std::chrono::steady_clock::now();
  auto const cfg = load_config(opt.config, opt.depth);
  BuiltSystem const spec = system_from_json(cfg.json, opt.depth);
  auto const &sys = spec.system;
  std::size_t const d = sys.depth();
  if (opt.depth && opt.depth != d)
    throw ArgumentError("config depth " + std::to_string(d) + " differs from --depth " +
                        std::to_string(opt.depth));
  PathPrefix x;
  if (opt.path.empty())
    x.digits.assign(d, 0);
  else
    x = parse_vertex(opt.path);
  validate_path(sys.tree(), x);
  if (!opt.n_max_set && opt.buffer > d)
    throw ArgumentError("buffer exceeds the depth");
  std::size_t const n_max = opt.n_max_set ? opt.n_max : d - opt.buffer;
  if (n_max + opt.buffer > d)
    throw ArgumentError("n-max " + std::to_string(n_max) + " plus buffer " +
                        std::to_string(opt.buffer) + " exceeds depth " + std::to_string(d));

  ChainReport const rep = chain_report(sys, x, n_max, opt.buffer);
  std::string const body =
      opt.format == "csv" ? report_to_csv(rep) : report_to_json(rep).dump(2) + "\n";
  if (opt.out.empty()) {
    out << body;
    return ok;
  }
  emit(opt, body, out);
  double const wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json manifest{{"command", "diagnose"},
                {"tool_version", tool_version},
                {"config_digest", digest(cfg.bytes)},
                {"depth", d},
                {"report_digest", digest(body)},
                {"wall_seconds", wall}};
  out << manifest.dump(2) << "\n";
  return ok;
}

int cmd_verify(Options const &opt, std::ostream &out)
{
  auto const t0 = std::chrono::steady_clock::now();
  if (opt.suite.empty())
    throw ArgumentError("verify needs a suite name");
  std::vector<std::string> names;
  if (opt.suite == "all") {
    for (auto const &s : suites())
      names.push_back(s.name);
  } else {
    names.push_back(opt.suite);
    bool known = false;
    for (auto const &s : suites())
      known = known || s.name == opt.suite;
    if (!known)
      throw ArgumentError("unknown suite: " + opt.suite);
  }

  bool all_passed = true;
  Json checks = Json::array();
  for (auto const &name : names) {
    for (auto const &r : run_suite(name)) {
      all_passed = all_passed && r.passed;
      checks.push_back(Json{{"suite", name},
                            {"check", r.name},
                            {"outcome", r.passed ? "pass" : "fail"},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
    }
  }
  double const wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json manifest{{"command", "verify"},
                {"tool_version", tool_version},
                {"suite", opt.suite},
                {"checks", std::move(checks)},
                {"outcome", all_passed ? "pass" : "fail"},
                {"wall_seconds", wall}};
  std::string const text = manifest.dump(2) + "\n";
  if (opt.out.empty())
    out << text;
  else {
    emit(opt, text, out);
    out << (all_passed ? "pass" : "fail") << "\n";
  }
  return all_passed ? ok : check_failed;
}

int cmd_report(Options const &opt, std::ostream &out)
{
  auto const cfg = load_config(opt.config, 0);
  ChainReport const rep = report_from_json(cfg.json);
  std::string const body =
      opt.format == "json" ? report_to_json(rep).dump(2) + "\n" : report_to_csv(rep);
  emit(opt, body, out);
  return ok;
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Group chains of actions on spherically homogeneous trees"};
  app.require_subcommand(1);
  Options opt;

  auto *build = app.add_subcommand("build", "Build a system from a config file or preset");
  build->add_option("--config", opt.config, "Config JSON path or preset name")->required();
  build->add_option("--out", opt.out, "Write the system JSON here");
  build->add_option("--depth", opt.depth, "Override the configured depth");

  auto *diagnose = app.add_subcommand("diagnose", "Compute the K / Z chain report");
  diagnose->add_option("--config", opt.config, "System or config JSON path, or preset name")
      ->required();
  diagnose->add_option("--out", opt.out, "Write the report here");
  diagnose->add_option("--path", opt.path, "Boundary path digits, e.g. 0,0,0,0");
  auto *n_max_opt = diagnose->add_option("--n-max", opt.n_max, "Last chain index");
  diagnose->add_option("--depth", opt.depth, "Truncation depth");
  diagnose->add_option("--buffer", opt.buffer, "Levels kept below n-max")->capture_default_str();
  diagnose->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite,--suite", opt.suite, "Suite name, or all");
  verify->add_option("--out", opt.out, "Write the manifest here");

  auto *report = app.add_subcommand("report", "Convert a chain report");
  report->add_option("--config", opt.config, "Report JSON path")->required();
  report->add_option("--out", opt.out, "Output path");
  opt.format = "json";
  report->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  opt.n_max_set = n_max_opt->count() > 0;
  if (report->parsed() && report->get_option("--format")->count() == 0)
    opt.format = "csv";

  try {
    if (build->parsed())
      return cmd_build(opt, out);
    if (diagnose->parsed())
      return cmd_diagnose(opt, out);
    if (verify->parsed())
      return cmd_verify(opt, out);
    return cmd_report(opt, out);
  } catch (ArgumentError const &e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (CertificationError const &e) {
    err << "certification failure: " << e.what() << "\n";
    return certification;
  } catch (BudgetExceeded const &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return certification;
  } catch (Json::exception const &e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

} // namespace arboreal
