#include "confalg/report.hpp"

#include <chrono>
#include <cctype>
#include <cmath>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace confalg {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSignature = "(+,-,-,-)";
constexpr const char* kEpsilon = "eps_{0123} = +1";
constexpr int kHbar = 1;

double shown_duration(const CheckResult& r, const RenderOptions& options) {
  if (!options.timestamp) return 0;
  return std::round(r.duration_ms * 1000) / 1000;
}

std::string format_ms(double ms) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << ms;
  return s.str();
}

/// Keeps a value inside one markdown table cell.
std::string cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "<br>";
    else out += c;
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string render_json(const Report& report, const RenderOptions& options) {
  Json j;
  j["version"] = report.version;
  if (options.timestamp) j["timestamp"] = *options.timestamp;
  j["conventions"] = {{"signature", kSignature}, {"epsilon_orientation", kEpsilon}, {"hbar", kHbar}};
  j["parameters"] = {{"particles", report.options.particles}, {"seed", report.options.seed}};
  Json checks = Json::array();
  for (const auto& r : report.checks) {
    Json c;
    c["id"] = r.id;
    c["paper_ref"] = r.paper_ref;
    c["status"] = std::string(to_string(r.status));
    c["residual_terms"] = r.residual_terms;
    if (!r.residual_text.empty()) c["residual_text"] = r.residual_text;
    c["duration_ms"] = shown_duration(r, options);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["totals"] = {{"pass", report.pass}, {"fail", report.fail}, {"error", report.error}};
  return j.dump(2) + "\n";
}

std::string render_markdown(const Report& report, const RenderOptions& options) {
  std::ostringstream s;
  s << "# Verification report\n\n";
  s << "- version: " << report.version << "\n";
  if (options.timestamp) s << "- timestamp: " << *options.timestamp << "\n";
  s << "- signature: `" << kSignature << "`\n";
  s << "- epsilon_orientation: `" << kEpsilon << "`\n";
  s << "- hbar: " << kHbar << "\n";
  s << "- particles: " << report.options.particles << "\n";
  s << "- seed: " << report.options.seed << "\n\n";
  s << "| id | paper_ref | status | residual_terms | duration_ms | residual_text |\n";
  s << "|---|---|---|---|---|---|\n";
  for (const auto& r : report.checks) {
    s << "| " << cell(r.id) << " | " << cell(r.paper_ref) << " | " << to_string(r.status) << " | "
      << r.residual_terms << " | " << format_ms(shown_duration(r, options)) << " | " << cell(r.residual_text)
      << " |\n";
  }
  s << "\n**Totals:** pass " << report.pass << ", fail " << report.fail << ", error " << report.error << "\n";
  return s.str();
}

std::string render_text(const Report& report, const RenderOptions& options) {
  std::ostringstream s;
  s << "version " << report.version << "\n";
  if (options.timestamp) s << "timestamp " << *options.timestamp << "\n";
  s << "signature " << kSignature << "; epsilon_orientation " << kEpsilon << "; hbar " << kHbar << "\n";
  s << "particles " << report.options.particles << "; seed " << report.options.seed << "\n\n";
  for (const auto& r : report.checks) {
    s << upper(to_string(r.status)) << "  " << r.id << "  residual_terms=" << r.residual_terms
      << "  duration_ms=" << format_ms(shown_duration(r, options)) << "\n";
    s << "      paper_ref: " << r.paper_ref << "\n";
    if (!r.residual_text.empty()) s << "      residual_text: " << r.residual_text << "\n";
  }
  s << "\ntotals: pass " << report.pass << ", fail " << report.fail << ", error " << report.error << "\n";
  return s.str();
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  if (name == "text") return ReportFormat::Text;
  throw UsageError("unknown format: " + std::string(name));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render_report(const Report& report, ReportFormat format, const RenderOptions& options) {
  switch (format) {
    case ReportFormat::Json: return render_json(report, options);
    case ReportFormat::Markdown: return render_markdown(report, options);
    case ReportFormat::Text: return render_text(report, options);
  }
  return {};
}

std::string render_catalog(const std::vector<const CheckDescriptor*>& checks, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json arr = Json::array();
    for (const auto* c : checks) {
      arr.push_back({{"id", c->id},
                     {"paper_ref", c->paper_ref},
                     {"module", c->module},
                     {"group", c->group},
                     {"parameters", c->parameters}});
    }
    return Json{{"checks", std::move(arr)}}.dump(2) + "\n";
  }
  std::ostringstream s;
  if (format == ReportFormat::Markdown) {
    s << "| id | group | module | parameters | paper_ref |\n|---|---|---|---|---|\n";
    for (const auto* c : checks) {
      s << "| " << cell(c->id) << " | " << c->group << " | " << c->module << " | " << cell(c->parameters) << " | "
        << cell(c->paper_ref) << " |\n";
    }
  } else {
    for (const auto* c : checks) {
      s << c->id << "  [" << c->group << "; " << c->parameters << "]  " << c->paper_ref << "\n";
    }
  }
  return s.str();
}

}  // namespace confalg
