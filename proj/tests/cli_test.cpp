#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "confalg/checks.hpp"
#include "confalg/report.hpp"

using namespace confalg;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("confverify_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

StructureTable corrupted_table() {
  return conformal_table().with_entry(Generator::P(0), Generator::C(0),
                                      CoefficientExpr(-3) * AlgebraElement(Generator::D()));
}

}  // namespace

TEST_CASE("catalog identifiers are unique, sorted and traceable") {
  const auto& catalog = check_catalog();
  std::set<std::string> ids;
  for (const auto& c : catalog) {
    ids.insert(c.id);
    CHECK(c.paper_ref.rfind("Eq. (", 0) == 0);
    CHECK_FALSE(c.module.empty());
  }
  CHECK(ids.size() == catalog.size());
  CHECK(std::is_sorted(catalog.begin(), catalog.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("selection by group, prefix and identifier") {
  CHECK(select_checks({"jacobi"}).size() == 455);
  CHECK(select_checks({"eq4"}).size() == 105);
  CHECK(select_checks({"matrix.pair"}).size() == 105);
  CHECK(select_checks({"eq7"}).size() == 3);
  CHECK(select_checks({"eq7.dilatation", "eq7"}).size() == 3);
  CHECK(select_checks({"all"}).size() == check_catalog().size());
  std::size_t grouped = 0;
  for (const char* g : {"algebra", "identities", "matrix", "realization"}) grouped += select_checks({g}).size();
  CHECK(grouped == check_catalog().size());
  CHECK_THROWS_AS(select_checks({"eq99"}), UsageError);
  CHECK_THROWS_AS(select_checks({"eq7.dil"}), UsageError);
  CHECK_THROWS_AS(select_checks({}), UsageError);
}

TEST_CASE("runs on the conformal table pass") {
  const Report r = run({"algebra", "matrix"}, {});
  CHECK(r.fail == 0);
  CHECK(r.error == 0);
  CHECK(r.pass == r.checks.size());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("a corrupted structure table fails the suite") {
  const StructureTable bad = corrupted_table();
  RunOptions options;
  options.table = &bad;
  const Report r = run({"eq3", "eq4", "algebra.antisymmetry", "identities"}, options);
  CHECK(r.fail > 0);
  CHECK(r.exit_code() == 1);
  bool pair_failed = false;
  for (const auto& c : r.checks) {
    if (c.id == "eq4.pair.P0.C0") {
      pair_failed = c.status == CheckStatus::Fail && c.residual_terms > 0 && !c.residual_text.empty();
    }
  }
  CHECK(pair_failed);
}

TEST_CASE("invalid run options are usage errors") {
  RunOptions options;
  options.particles = 1;
  CHECK_THROWS_AS(run({"eq7"}, options), UsageError);
  options.particles = 2;
  options.jobs = 0;
  CHECK_THROWS_AS(run({"eq7"}, options), UsageError);
}

TEST_CASE("reports are byte-deterministic across job counts") {
  RunOptions one;
  RunOptions three;
  three.jobs = 3;
  const Report a = run({"identities", "eq4"}, one);
  const Report b = run({"identities", "eq4"}, three);
  for (ReportFormat f : {ReportFormat::Json, ReportFormat::Markdown, ReportFormat::Text}) {
    CHECK(render_report(a, f) == render_report(b, f));
  }
}

TEST_CASE("JSON report layout") {
  const Report r = run({"eq7"}, {});
  const auto j = nlohmann::ordered_json::parse(render_report(r, ReportFormat::Json, {"2026-01-01T00:00:00Z"}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "timestamp", "conventions", "parameters", "checks", "totals"});
  CHECK(j["conventions"]["signature"] == "(+,-,-,-)");
  CHECK(j["conventions"]["epsilon_orientation"] == "eps_{0123} = +1");
  CHECK(j["conventions"]["hbar"] == 1);
  CHECK(j["checks"].size() == 3);
  const auto& c = j["checks"][0];
  CHECK(c["id"] == "eq7.canonical-commutator");
  CHECK(c["status"] == "pass");
  CHECK(c["residual_terms"] == 0);
  CHECK_FALSE(c.contains("residual_text"));
  CHECK(c.contains("duration_ms"));
  CHECK(j["totals"]["pass"] == 3);
  CHECK(j["totals"]["fail"] == 0);
  CHECK(j["totals"]["error"] == 0);
  CHECK_FALSE(nlohmann::json::parse(render_report(r, ReportFormat::Json)).contains("timestamp"));
}

TEST_CASE("markdown and text carry the same fields") {
  const StructureTable bad = corrupted_table();
  RunOptions options;
  options.table = &bad;
  const Report r = run({"eq4.pair.P0.C0", "eq7.dilatation"}, options);
  for (ReportFormat f : {ReportFormat::Markdown, ReportFormat::Text}) {
    const std::string s = render_report(r, f);
    for (const char* field : {"signature", "epsilon_orientation", "hbar", "paper_ref", "residual_terms",
                              "residual_text", "duration_ms", "eq4.pair.P0.C0", "eq7.dilatation", "fail", "pass",
                              "error", "0.1.0"}) {
      INFO(field);
      CHECK(s.find(field) != std::string::npos);
    }
  }
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"verify", "eq7", "--no-timestamp"}).code == 0);
  CHECK(cli({"verify", "no-such-check"}).code == 2);
  CHECK(cli({"verify", "eq7", "--format", "yaml"}).code == 2);
  CHECK(cli({"verify", "eq7", "--particles", "7"}).code == 2);
  CHECK(cli({"verify", "eq7", "--jobs", "x"}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  const CliRun listing = cli({"list-checks", "--format", "text"});
  CHECK(listing.code == 0);
  CHECK(std::count(listing.out.begin(), listing.out.end(), '\n') == static_cast<long>(check_catalog().size()));
}

TEST_CASE("cli output is deterministic without a timestamp") {
  const CliRun a = cli({"verify", "identities", "--no-timestamp", "--format", "markdown"});
  const CliRun b = cli({"verify", "identities", "--no-timestamp", "--format", "markdown", "--jobs", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timestamp") == std::string::npos);
  CHECK(cli({"verify", "eq7"}).out.find("\"timestamp\"") != std::string::npos);
}

TEST_CASE("cli writes reports to a file") {
  const auto path = temp_file("out.json");
  const CliRun r = cli({"verify", "eq11", "--no-timestamp", "--out", path.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["totals"]["pass"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const auto path = temp_file("config.json");
  {
    std::ofstream cfg(path);
    cfg << R"({"checks": ["eq7"], "format": "text", "no-timestamp": true, "seed": 9, "particles": 3})";
  }
  const CliRun from_config = cli({"verify", "--config", path.string()});
  CHECK(from_config.code == 0);
  CHECK(from_config.out.find("particles 3; seed 9") != std::string::npos);
  CHECK(from_config.out.find("PASS  eq7.lorentz") != std::string::npos);

  const CliRun overridden = cli({"verify", "eq10", "--config", path.string(), "--format", "json", "--seed", "4"});
  CHECK(overridden.code == 0);
  const auto j = nlohmann::json::parse(overridden.out);
  CHECK(j["parameters"]["seed"] == 4);
  CHECK(j["parameters"]["particles"] == 3);
  CHECK(j["checks"].size() == 2);
  CHECK_FALSE(j.contains("timestamp"));

  {
    std::ofstream cfg(path);
    cfg << R"({"chekcs": ["eq7"]})";
  }
  CHECK(cli({"verify", "eq7", "--config", path.string()}).code == 2);
  {
    std::ofstream cfg(path);
    cfg << "not json";
  }
  CHECK(cli({"verify", "eq7", "--config", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(cli({"verify", "eq7", "--config", path.string()}).code == 2);
}
