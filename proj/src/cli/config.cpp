#include "heckeo/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace heckeo::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(const std::string& v, const std::string& where) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || out == 0) throw ConfigError(where + ": expected a positive integer, got '" + v + "'");
  return out;
}

}  // namespace

Config parse_config(const std::string& text, const std::string& origin) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    std::string where = origin + ":" + std::to_string(n);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "enumeration_cap") {
      c.enumeration_cap = parse_count(value, where);
    } else if (key == "format") {
      try {
        c.format = parse_format(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
      }
    } else if (key == "table_width") {
      c.table_width = parse_count(value, where);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path);
}

Config resolve_config(const std::optional<std::string>& flag_path, const char* env_value) {
  if (flag_path) return load_config_file(*flag_path);
  if (env_value && *env_value) return load_config_file(env_value);
  return {};
}

}  // namespace heckeo::cli
