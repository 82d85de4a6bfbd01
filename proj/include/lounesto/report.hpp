#pragma once

#include <string>

#include <json.hpp>

#include "lounesto/bilinears.hpp"
#include "lounesto/classifier.hpp"
#include "lounesto/config.hpp"
#include "lounesto/spinors.hpp"
#include "lounesto/symmetry.hpp"

namespace lounesto {

inline constexpr const char* kSchemaVersion = "lounesto-report/1";

std::string version();

using nlohmann::json;

/// [re, im]
json to_json(const Complex& z);
Complex complex_from_json(const json& j);

/// 4x4 array of [re, im] pairs, row-major.
json to_json(const Matrix4& m);
Matrix4 matrix_from_json(const json& j);

json to_json(const Vector4c& v);
Vector4c vector_from_json(const json& j);

json to_json(const SymOperator& op);
SymOperator operator_from_json(const json& j);

json to_json(const BilinearSet& b);
json to_json(const FpkReport& r);
json to_json(const IdentityReport& r);
json to_json(const ConstraintCheck& c);
json to_json(const VanishingPattern& p);
json to_json(const Spinor& s, const Momentum& p);
json to_json(const RunConfig& c);

/// Envelope {schema, version, command, config, result}.
json envelope(const std::string& command, const RunConfig& config, json result);

}  // namespace lounesto
