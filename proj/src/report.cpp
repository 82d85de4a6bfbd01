#include "lounesto/report.hpp"

namespace lounesto {

std::string version() { return LOUNESTO_VERSION; }

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Matrix4& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix4 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix must have 4 rows");
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4) throw std::invalid_argument("matrix rows must have 4 entries");
    for (int c = 0; c < 4; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Vector4c& v) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back(to_json(v(i)));
  return out;
}

Vector4c vector_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("spinor must have 4 components");
  Vector4c v;
  for (int i = 0; i < 4; ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json to_json(const SymOperator& op) {
  return {{"label", op.label}, {"antilinear", op.antilinear}, {"matrix", to_json(op.matrix)}};
}

SymOperator operator_from_json(const json& j) {
  return {matrix_from_json(j.at("matrix")), j.at("antilinear").get<bool>(), j.at("label").get<std::string>()};
}

json to_json(const BilinearSet& b) {
  json j;
  j["sigma"] = to_json(b.sigma);
  j["omega"] = to_json(b.omega);
  j["J"] = json::array();
  j["K"] = json::array();
  for (int mu = 0; mu < 4; ++mu) {
    j["J"].push_back(to_json(b.J[mu]));
    j["K"].push_back(to_json(b.K[mu]));
  }
  j["S"] = json::object();
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    j["S"][std::to_string(kBivectorPairs[k][0]) + std::to_string(kBivectorPairs[k][1])] = to_json(b.S[k]);
  }
  return j;
}

json to_json(const FpkReport& r) {
  json ids = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    ids.push_back({{"name", kFpkNames[i]}, {"residual", r.residuals[i]}, {"relative", r.residuals[i] / r.scale},
                   {"pass", r.pass[i]}});
  }
  return {{"scale", r.scale}, {"identities", ids}, {"pass", r.all_pass()}};
}

json to_json(const IdentityReport& r) {
  json ids = json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    ids.push_back({{"name", r.names[i]}, {"residual", r.residuals[i]}, {"pass", r.residuals[i] <= r.tol}});
  }
  return {{"tolerance", r.tol}, {"identities", ids}, {"pass", r.all_pass()}};
}

json to_json(const ConstraintCheck& c) {
  json items = json::array();
  for (const auto& i : c.items) {
    items.push_back({{"name", i.name}, {"residual", i.residual}, {"pass", i.pass}, {"gating", i.gating}});
  }
  return {{"items", items}, {"pass", c.all_pass()}};
}

json to_json(const VanishingPattern& p) {
  static const std::array<const char*, 5> names{"sigma", "omega", "J", "K", "S"};
  json flags = json::object();
  json rel = json::object();
  for (int i = 0; i < 5; ++i) {
    flags[names[i]] = p.nonzero[i] ? "!=0" : "=0";
    rel[names[i]] = p.relative[i];
  }
  return {{"pattern", flags}, {"relative", rel}, {"scale", p.scale}, {"margin_decades", p.margin}};
}

json to_json(const Spinor& s, const Momentum& p) {
  return {{"components", to_json(s.components)},
          {"kind", to_string(s.kind)},
          {"h", s.h},
          {"momentum", {p.energy(), p.px(), p.py(), p.pz()}},
          {"mass", p.mass()}};
}

json to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"mass", c.mass},
          {"trials", c.trials},
          {"format", to_string(c.format)},
          {"momentum", c.momentum},
          {"tolerances",
           {{"zero", c.tol.zero}, {"fpk", c.tol.fpk}, {"cls", c.tol.cls}, {"fit", c.tol.fit}, {"shell", c.tol.shell}}}};
}

json envelope(const std::string& command, const RunConfig& config, json result) {
  return {{"schema", kSchemaVersion},
          {"version", version()},
          {"command", command},
          {"config", to_json(config)},
          {"result", std::move(result)}};
}

}  // namespace lounesto
