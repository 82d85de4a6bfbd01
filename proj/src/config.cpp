#include "lounesto/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lounesto {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
  }
  if (used != value.size()) throw std::invalid_argument(key + ": trailing characters in '" + value + "'");
  return v;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" + value + "'");
  }
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(key + ": integer out of range '" + value + "'");
  }
}

}  // namespace

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Markdown:
      return "markdown";
  }
  return "?";
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw std::invalid_argument("format must be json, csv or markdown, got '" + text + "'");
}

void RunConfig::validate() const {
  for (double t : {tol.zero, tol.fpk, tol.cls, tol.fit, tol.shell}) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("tolerances must be finite and > 0");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be finite and > 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!momentum.empty() && momentum.size() != 3 && momentum.size() != 4) {
    throw std::invalid_argument("momentum takes 3 (px,py,pz) or 4 (p0,px,py,pz) reals");
  }
  (void)resolved_momentum();
}

Momentum RunConfig::resolved_momentum() const {
  if (momentum.empty()) return Momentum::rest(mass);
  if (momentum.size() == 3) return Momentum::on_shell(momentum[0], momentum[1], momentum[2], mass);
  if (momentum.size() == 4) {
    return Momentum::from_components({momentum[0], momentum[1], momentum[2], momentum[3]}, mass, tol.shell);
  }
  throw std::invalid_argument("momentum takes 3 (px,py,pz) or 4 (p0,px,py,pz) reals");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "seed") {
    c.seed = parse_count(key, value);
  } else if (key == "mass") {
    c.mass = parse_double(key, value);
  } else if (key == "trials") {
    c.trials = parse_count(key, value);
  } else if (key == "format") {
    c.format = parse_format(value);
  } else if (key == "momentum") {
    c.momentum = parse_reals(value);
  } else if (key == "tol.zero") {
    c.tol.zero = parse_double(key, value);
  } else if (key == "tol.fpk") {
    c.tol.fpk = parse_double(key, value);
  } else if (key == "tol.cls") {
    c.tol.cls = parse_double(key, value);
  } else if (key == "tol.fit") {
    c.tol.fit = parse_double(key, value);
  } else if (key == "tol.shell") {
    c.tol.shell = parse_double(key, value);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  for (const auto& [k, v] : parse_key_values(buffer.str())) apply_setting(base, k, v);
  return base;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double("list", trim(item)));
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("list: trailing comma");
  for (double v : out) {
    if (!std::isfinite(v)) throw std::invalid_argument("list: non-finite value");
  }
  return out;
}

Vector4c parse_spinor(const std::string& text) {
  const auto v = parse_reals(text);
  if (v.size() != 8) {
    throw std::invalid_argument("spinor needs 8 comma-separated reals (re,im per component), got " +
                                std::to_string(v.size()));
  }
  Vector4c psi;
  for (int i = 0; i < 4; ++i) psi(i) = Complex(v[2 * i], v[2 * i + 1]);
  return psi;
}

}  // namespace lounesto
