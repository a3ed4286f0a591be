#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/checks.hpp"

namespace confalg {

enum class ReportFormat { Json, Markdown, Text };

/// Throws UsageError for anything but json, markdown or text.
ReportFormat parse_format(std::string_view name);

struct RenderOptions {
  /// Wall-clock stamp to embed; nullopt omits the field and zeroes every
  /// duration so the output depends only on selection, seed and version.
  std::optional<std::string> timestamp;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

std::string render_report(const Report& report, ReportFormat format, const RenderOptions& options = {});
std::string render_catalog(const std::vector<const CheckDescriptor*>& checks, ReportFormat format);

}  // namespace confalg
