#pragma once

#include <string>
#include <vector>

#include "heckeo/check.hpp"

namespace heckeo::cli {

enum class Format { json, csv, table };

/// Parses "json", "csv", "table"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);
std::string to_string(Format f);

struct TimedCheck {
  CheckResult check;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::string type;  // Cartan type, empty when not applicable
  std::vector<TimedCheck> checks;

  bool pass() const;
  /// Keeps the report order-stable regardless of how checks were produced.
  void sort_checks();
};

struct EmitOptions {
  bool timings = false;          // elapsed ms are nondeterministic, so off by default
  std::size_t table_width = 100;
};

/// json: {"schema":1,"suite":...,["type":...,]"checks":[...],"pass":...}
std::string emit(const VerificationReport& report, Format format, const EmitOptions& opts = {});

/// Greedy word wrap by code points; words longer than the width are split.
std::vector<std::string> wrap_text(const std::string& text, std::size_t width);
/// Number of UTF-8 code points.
std::size_t display_width(const std::string& text);

std::string csv_escape(const std::string& field);

}  // namespace heckeo::cli
