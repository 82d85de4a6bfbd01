#pragma once

#include <array>
#include <optional>
#include <string>

#include "lounesto/kinematics.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

/// Linear (psi -> M psi) or antilinear (psi -> M conj(psi)) operator on spinors.
struct SymOperator {
  Matrix4 matrix = Matrix4::Identity();
  bool antilinear = false;
  std::string label = "1";
};

SymOperator identity_operator();

/// C = gamma_2 K.
SymOperator charge_conjugation();

/// P = gamma.p / m; gamma_0 at rest.
SymOperator parity(const Momentum& p);

/// T = -(1/4!) eps_abrs g^a g^b g^r g^s C, summed over all 24 orderings.
SymOperator time_reversal();

/// a after b. Antilinearity is XOR; an antilinear `a` conjugates b's matrix.
SymOperator compose(const SymOperator& a, const SymOperator& b);

/// Multiplies the matrix by c on the left (c M for both classes).
SymOperator scaled(const SymOperator& op, Complex c, std::string label);

SymOperator linear_operator(const Matrix4& m, std::string label);

Vector4c apply(const SymOperator& op, const Vector4c& psi);

/// Same antilinearity and matrices equal to `tol` (absolute, entrywise).
bool same_operator(const SymOperator& a, const SymOperator& b, double tol);

enum class Discrete { Identity, P, C, T, CP, CT, PT, CPT };

inline constexpr std::array<Discrete, 8> kAllDiscrete{Discrete::Identity, Discrete::P,  Discrete::C,
                                                      Discrete::T,        Discrete::CP, Discrete::CT,
                                                      Discrete::PT,       Discrete::CPT};

/// "1", "P", "C", "T", "CP", "CT", "PT", "CPT".
std::string to_string(Discrete d);
std::optional<Discrete> parse_discrete(const std::string& text);
int index_of(Discrete d);

/// Products are built left to right, e.g. CPT = compose(compose(C, P), T).
SymOperator discrete_operator(Discrete d, const Momentum& p);

struct RelationEntry {
  /// +1 or -1 when identified, 0 otherwise.
  int sign = 0;
  std::optional<Discrete> op;
  SymOperator raw;

  /// "CP", "-1", or "?" for an unidentified product.
  std::string text() const;
};

struct RelationTable {
  /// cells[row][col] = row * col.
  std::array<std::array<RelationEntry, 8>, 8> cells;

  std::string markdown() const;
  std::string csv() const;
};

RelationTable relation_table(const Momentum& p, double tol = Tolerances{}.zero);

/// Expected entries in RelationEntry::text() form, row-major.
const std::array<std::array<std::string, 8>, 8>& reference_relation_table();

}  // namespace lounesto
