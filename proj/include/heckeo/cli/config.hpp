#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "heckeo/cli/report.hpp"

namespace heckeo::cli {

/// Environment variable naming the config file.
inline constexpr const char* kConfigEnv = "HECKEO_CONFIG";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t enumeration_cap = 40320;  // 8!
  Format format = Format::json;
  std::size_t table_width = 100;
};

/// key = value lines; '#' starts a comment. Keys: enumeration_cap, format,
/// table_width. Throws ConfigError on unknown keys or bad values.
Config parse_config(const std::string& text, const std::string& origin = "<config>");
Config load_config_file(const std::string& path);
/// --config wins over the environment variable; no file means defaults.
Config resolve_config(const std::optional<std::string>& flag_path, const char* env_value);

}  // namespace heckeo::cli
