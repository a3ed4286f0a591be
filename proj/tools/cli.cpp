#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "confalg/checks.hpp"
#include "confalg/report.hpp"

namespace confalg {

namespace {

constexpr int kUsageExit = 2;

struct Settings {
  std::vector<std::string> selection;
  int particles = 2;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
  std::string out;
  bool no_timestamp = false;
  std::string config;
};

/// Options a config file may set, keyed like the long flags.
struct Bindings {
  CLI::Option* selection = nullptr;
  CLI::Option* particles = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* jobs = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* no_timestamp = nullptr;
};

template <class T>
T config_value(const nlohmann::json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("config key '" + key + "' has the wrong type");
  }
}

/// Fills every setting whose flag was not given on the command line.
void apply_config(const std::string& path, const Bindings& b, Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [](const CLI::Option* o) { return o == nullptr || o->count() == 0; };
  for (const auto& [key, value] : j.items()) {
    if (key == "checks") {
      if (unset(b.selection)) {
        s.selection = value.is_string() ? std::vector<std::string>{value.get<std::string>()}
                                        : config_value<std::vector<std::string>>(value, key);
      }
    } else if (key == "particles") {
      if (unset(b.particles)) s.particles = config_value<int>(value, key);
    } else if (key == "seed") {
      if (unset(b.seed)) s.seed = config_value<std::uint64_t>(value, key);
    } else if (key == "jobs") {
      if (unset(b.jobs)) s.jobs = config_value<int>(value, key);
    } else if (key == "format") {
      if (unset(b.format)) s.format = config_value<std::string>(value, key);
    } else if (key == "out") {
      if (unset(b.out)) s.out = config_value<std::string>(value, key);
    } else if (key == "no-timestamp" || key == "no_timestamp") {
      if (unset(b.no_timestamp)) s.no_timestamp = config_value<bool>(value, key);
    } else {
      throw UsageError("unknown config key: " + key);
    }
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write output file: " + path);
  file << text;
}

int verify(const Settings& s, std::ostream& out) {
  if (s.selection.empty()) throw UsageError("verify needs at least one check, group or 'all'");
  const ReportFormat format = parse_format(s.format);
  RunOptions options;
  options.particles = s.particles;
  options.seed = s.seed;
  options.jobs = s.jobs;
  const Report report = run(s.selection, options);
  RenderOptions render;
  if (!s.no_timestamp) render.timestamp = utc_timestamp();
  emit(render_report(report, format, render), s.out, out);
  if (!s.out.empty()) {
    out << "pass " << report.pass << ", fail " << report.fail << ", error " << report.error << "\n";
  }
  return report.exit_code();
}

int list_checks(const Settings& s, std::ostream& out) {
  const ReportFormat format = parse_format(s.format);
  std::vector<const CheckDescriptor*> checks;
  if (s.selection.empty()) {
    for (const auto& c : check_catalog()) checks.push_back(&c);
  } else {
    checks = select_checks(s.selection);
  }
  emit(render_catalog(checks, format), s.out, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of conformal-algebra operator identities", "confverify"};
  app.require_subcommand(1);
  Settings s;
  Bindings vb;

  auto* verify_cmd = app.add_subcommand("verify", "Run checks and write a report");
  vb.selection = verify_cmd->add_option("checks", s.selection,
                                        "all, algebra, identities, matrix, realization, or check identifiers");
  vb.particles = verify_cmd->add_option("--particles", s.particles, "Particle count of the realization (2..4)");
  vb.seed = verify_cmd->add_option("--seed", s.seed, "Seed for the randomized checks");
  vb.jobs = verify_cmd->add_option("--jobs", s.jobs, "Worker threads");
  vb.format = verify_cmd->add_option("--format", s.format, "json, markdown or text");
  vb.out = verify_cmd->add_option("--out", s.out, "Write the report to this file");
  vb.no_timestamp = verify_cmd->add_flag("--no-timestamp", s.no_timestamp,
                                         "Omit the timestamp and durations so output is byte-identical");
  verify_cmd->add_option("--config", s.config, "JSON file with the same keys as the flags");

  Bindings lb;
  auto* list_cmd = app.add_subcommand("list-checks", "List check identifiers");
  lb.selection = list_cmd->add_option("checks", s.selection, "Optional groups or identifiers to list");
  lb.format = list_cmd->add_option("--format", s.format, "json, markdown or text");
  lb.out = list_cmd->add_option("--out", s.out, "Write the listing to this file");
  list_cmd->add_option("--config", s.config, "JSON file with the same keys as the flags");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    if (verify_cmd->parsed()) {
      if (!s.config.empty()) apply_config(s.config, vb, s);
      return verify(s, out);
    }
    if (!s.config.empty()) apply_config(s.config, lb, s);
    return list_checks(s, out);
  } catch (const UsageError& e) {
    err << "confverify: " << e.what() << "\n";
    return kUsageExit;
  }
}

}  // namespace confalg
