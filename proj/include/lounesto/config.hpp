#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lounesto/kinematics.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

enum class OutputFormat { Json, Csv, Markdown };

std::string to_string(OutputFormat f);
OutputFormat parse_format(const std::string& text);

struct RunConfig {
  std::uint64_t seed = 42;
  Tolerances tol{};
  /// Either (px, py, pz) or a full (p0, px, py, pz) checked against the mass shell.
  std::vector<double> momentum;
  double mass = 1.0;
  std::uint64_t trials = 100;
  OutputFormat format = OutputFormat::Json;

  /// Throws std::invalid_argument naming the violated precondition.
  void validate() const;
  /// Rest frame when no momentum was given.
  Momentum resolved_momentum() const;
};

/// Flat `key = value` lines; `#` starts a comment. Throws on malformed lines.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Keys: seed, mass, trials, format, momentum, tol.zero, tol.fpk, tol.cls, tol.fit, tol.shell.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

std::vector<double> parse_reals(const std::string& text);

/// Eight comma-separated reals, (re, im) per component.
Vector4c parse_spinor(const std::string& text);

}  // namespace lounesto
