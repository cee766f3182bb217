#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "superalg/weylcore/gaussian_rational.h"

namespace superalg::cli {

constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

enum class OutputFormat { Json, Csv, Text };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Bad flags, parameters or expressions; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double round_significant(double x, int digits = 12);

/// Every floating-point leaf rounded to 12 significant digits.
nlohmann::json normalize_numbers(nlohmann::json j);

/// "num/den", or "num" for integers.
std::string rational_text(const Rational& q);

/// %.12g
std::string format_double(double x);

struct Report {
  nlohmann::json payload;  // command-specific fields
  std::string text;
  std::optional<std::string> csv;
  int exit_code = kExitOk;
};

/// JSON: payload plus "schema" and "command", keys sorted, two-space indent.
/// Throws UsageError when the format is csv and the command has no table.
std::string render(const Report& report, const std::string& command, OutputFormat format);

}  // namespace superalg::cli
