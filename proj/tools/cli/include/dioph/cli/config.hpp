#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/system.hpp"

namespace dioph::cli {

/// Bad configuration. `what()` carries "file:line: message" when a line is known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& s);
std::string_view to_string(Format f);

struct RunConfig {
  std::string subcommand;

  // [lambda]
  std::optional<std::array<std::string, 3>> lambda;
  std::optional<std::array<std::string, 3>> ratio;
  bool ratio_irrational = true;

  // [mu]
  std::vector<std::string> extra_mu;
  std::string varpi = "0";

  // [run]
  std::string eta = "1";
  std::string eps = "1e-20";
  std::optional<double> X;
  std::size_t s = 1;
  std::optional<int> L;
  double range_eps = 0.1;
  unsigned precision = 50;
  Format format = Format::json;
  std::string out;  // empty: stdout
  unsigned workers = 1;
  std::vector<std::int64_t> n_list{24, 48, 120, 30030};
  double nu = 0.8844472132;
  unsigned k = 2;
  std::vector<double> h;
  std::size_t sample = 100;
  std::vector<int> only;

  /// Lambda, ratio and mu as a raw system; throws ConfigError when [lambda] is missing.
  RawSystem raw_system() const;
};

/// Reads [lambda], [mu] and [run] from a TOML file into `cfg`. Unknown
/// sections or keys are rejected with their line number.
void load_toml_file(const std::string& path, RunConfig& cfg);
void load_toml_string(const std::string& text, const std::string& source_name, RunConfig& cfg);

}  // namespace dioph::cli
