#include "heckeo/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace heckeo::cli {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv, table)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::table: return "table";
  }
  return "?";
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const TimedCheck& c) { return c.check.pass; });
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const TimedCheck& a, const TimedCheck& b) { return a.check.name < b.check.name; });
}

std::size_t display_width(const std::string& text) {
  std::size_t n = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

namespace {

// Splits s after `count` code points.
std::pair<std::string, std::string> split_at(const std::string& s, std::size_t count) {
  std::size_t seen = 0, i = 0;
  for (; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (seen == count) break;
      ++seen;
    }
  }
  return {s.substr(0, i), s.substr(i)};
}

std::string pad(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::vector<std::string> wrap_text(const std::string& text, std::size_t width) {
  if (width == 0) width = 1;
  std::vector<std::string> lines;
  std::string line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t sp = text.find(' ', pos);
    std::string word = text.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
    pos = sp == std::string::npos ? text.size() + 1 : sp + 1;
    if (word.empty()) continue;
    while (display_width(word) > width) {
      if (!line.empty()) {
        lines.push_back(line);
        line.clear();
      }
      auto [head, tail] = split_at(word, width);
      lines.push_back(head);
      word = tail;
    }
    if (line.empty()) line = word;
    else if (display_width(line) + 1 + display_width(word) <= width) line += " " + word;
    else {
      lines.push_back(line);
      line = word;
    }
  }
  if (!line.empty() || lines.empty()) lines.push_back(line);
  return lines;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit(const VerificationReport& report, Format format, const EmitOptions& opts) {
  std::string out;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["suite"] = report.suite;
      if (!report.type.empty()) j["type"] = report.type;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.check.name;
        e["pass"] = c.check.pass;
        e["detail"] = c.check.detail;
        if (opts.timings) e["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(e));
      }
      j["pass"] = report.pass();
      out = j.dump() + "\n";
      break;
    }
    case Format::csv: {
      out = opts.timings ? "name,pass,detail,elapsed_ms\n" : "name,pass,detail\n";
      for (const auto& c : report.checks) {
        out += csv_escape(c.check.name) + "," + (c.check.pass ? "true" : "false") + "," + csv_escape(c.check.detail);
        if (opts.timings) out += "," + format_ms(c.elapsed_ms);
        out += "\n";
      }
      break;
    }
    case Format::table: {
      std::size_t name_w = 5;
      for (const auto& c : report.checks) name_w = std::max(name_w, display_width(c.check.name));
      std::string head = "suite " + report.suite + (report.type.empty() ? "" : " (" + report.type + ")");
      out = head + "\n";
      std::size_t fixed = 6 + name_w + 2 + (opts.timings ? 12 : 0);
      std::size_t detail_w = opts.table_width > fixed + 20 ? opts.table_width - fixed : 20;
      std::size_t passed = 0;
      for (const auto& c : report.checks) {
        passed += c.check.pass;
        auto lines = wrap_text(c.check.detail, detail_w);
        std::string lead = std::string(c.check.pass ? "PASS  " : "FAIL  ") + pad(c.check.name, name_w) + "  ";
        if (opts.timings) lead += pad(format_ms(c.elapsed_ms) + " ms", 12);
        for (std::size_t k = 0; k < lines.size(); ++k) {
          std::string l = (k == 0 ? lead : std::string(fixed, ' ')) + lines[k];
          while (!l.empty() && l.back() == ' ') l.pop_back();
          out += l + "\n";
        }
      }
      out += std::string(report.pass() ? "PASS" : "FAIL") + " " + std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
             " checks\n";
      break;
    }
  }
  return out;
}

}  // namespace heckeo::cli
