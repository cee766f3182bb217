#include "superalg/cli/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace superalg::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

double round_significant(double x, int digits) {
  if (x == 0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // no "-0"
}

nlohmann::json normalize_numbers(nlohmann::json j) {
  if (j.is_number_float()) return round_significant(j.get<double>());
  if (j.is_structured())
    for (auto& child : j) child = normalize_numbers(std::move(child));
  return j;
}

std::string rational_text(const Rational& q) { return superalg::to_string(q); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round_significant(x));
  return buf;
}

std::string render(const Report& report, const std::string& command, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return report.text;
    case OutputFormat::Csv:
      if (!report.csv) throw UsageError("command '" + command + "' has no csv output");
      return *report.csv;
    case OutputFormat::Json:
      break;
  }
  nlohmann::json out = normalize_numbers(report.payload);
  out["schema"] = kSchemaVersion;
  out["command"] = command;
  return out.dump(2) + "\n";
}

}  // namespace superalg::cli
