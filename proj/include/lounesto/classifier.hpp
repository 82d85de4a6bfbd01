#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lounesto/bilinears.hpp"
#include "lounesto/duals.hpp"
#include "lounesto/spinors.hpp"

namespace lounesto {

/// Nonzero flags in the order sigma, omega, J, K, S.
using Pattern = std::array<bool, 5>;

struct TableRow {
  const char* name;
  int major;
  int sub;  // 0 = main class
  Pattern nonzero;
};

// clang-format off
inline constexpr std::array<TableRow, 19> kAllowedClasses{{
    {"1",   1, 0, {true,  true,  true,  true,  true }},
    {"1.1", 1, 1, {true,  true,  true,  true,  false}},
    {"1.2", 1, 2, {true,  true,  true,  false, true }},
    {"1.3", 1, 3, {true,  true,  true,  false, false}},
    {"1.4", 1, 4, {true,  true,  false, true,  true }},
    {"1.5", 1, 5, {true,  true,  false, false, false}},
    {"1.6", 1, 6, {true,  true,  false, false, true }},
    {"1.7", 1, 7, {true,  true,  false, true,  false}},
    {"2",   2, 0, {true,  false, true,  true,  true }},
    {"2.1", 2, 1, {true,  false, true,  true,  false}},
    {"3",   3, 0, {false, true,  true,  true,  true }},
    {"3.1", 3, 1, {false, true,  true,  true,  false}},
    {"4",   4, 0, {false, false, true,  true,  true }},
    {"4.1", 4, 1, {false, false, false, true,  true }},
    {"5",   5, 0, {false, false, true,  false, true }},
    {"5.1", 5, 1, {false, false, false, false, true }},
    {"6",   6, 0, {false, false, true,  true,  false}},
    {"6.1", 6, 1, {false, false, false, true,  false}},
    {"7",   7, 0, {false, false, true,  false, false}},
}};

inline constexpr std::array<TableRow, 12> kForbiddenClasses{{
    {"2.2*", 2, 2, {true,  false, true,  false, true }},
    {"2.3*", 2, 3, {true,  false, true,  false, false}},
    {"2.4*", 2, 4, {true,  false, false, true,  true }},
    {"2.5*", 2, 5, {true,  false, false, true,  false}},
    {"2.6*", 2, 6, {true,  false, false, false, true }},
    {"2.7*", 2, 7, {true,  false, false, false, false}},
    {"3.2*", 3, 2, {false, true,  true,  false, true }},
    {"3.3*", 3, 3, {false, true,  true,  false, false}},
    {"3.4*", 3, 4, {false, true,  false, true,  true }},
    {"3.5*", 3, 5, {false, true,  false, true,  false}},
    {"3.6*", 3, 6, {false, true,  false, false, true }},
    {"3.7*", 3, 7, {false, true,  false, false, false}},
}};
// clang-format on

constexpr int pattern_code(const Pattern& p) {
  int code = 0;
  for (int i = 0; i < 5; ++i) code |= (p[i] ? 1 : 0) << i;
  return code;
}

/// Every one of the 32 patterns is claimed exactly once by the two tables or the all-zero case.
constexpr bool tables_partition_patterns() {
  std::array<int, 32> hits{};
  hits[0] += 1;
  for (const auto& r : kAllowedClasses) hits[pattern_code(r.nonzero)] += 1;
  for (const auto& r : kForbiddenClasses) hits[pattern_code(r.nonzero)] += 1;
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

static_assert(tables_partition_patterns(), "class tables must cover all 32 vanishing patterns exactly once");

enum class Verdict { Allowed, Forbidden, Unclassifiable };

struct LounestoLabel {
  int major = 0;
  int sub = 0;
  Verdict verdict = Verdict::Unclassifiable;

  /// "1.6", "5", "2.2*", or "unclassifiable".
  std::string name() const;
  friend bool operator==(const LounestoLabel&, const LounestoLabel&) = default;
};

std::optional<LounestoLabel> parse_label(const std::string& text);

struct VanishingPattern {
  Pattern nonzero{};
  /// max(|sigma|, |omega|, |J|inf, |K|inf, |S|inf).
  double scale = 0.0;
  /// Smallest distance, in decades, between any quantity's relative size and the threshold.
  double margin = 0.0;
  /// Relative sizes |q| / scale in pattern order.
  std::array<double, 5> relative{};
};

VanishingPattern vanishing_pattern(const BilinearSet& b, double tol = Tolerances{}.cls);
LounestoLabel lookup(const Pattern& nonzero);
LounestoLabel classify(const BilinearSet& b, double tol = Tolerances{}.cls);

struct ConstraintItem {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  /// Informational items never fail a report.
  bool gating = true;
};

struct ConstraintCheck {
  std::vector<ConstraintItem> items;
  bool all_pass() const;
  const ConstraintItem* find(const std::string& name) const;
};

/// Constraint I (J^2 = 0 subclasses of class 1): sigma = +-i omega and S self-duality with the
/// sign fixed by that branch (2iS = +eps S for sigma = +i omega, -eps S for -i omega); the
/// unsigned form 2iS = eps S is reported but not gating. Constraints II/III (J, K != 0, S = 0):
/// J_mu K_nu = J_nu K_mu. Residuals are relative.
ConstraintCheck verify_constraints(const LounestoLabel& label, const BilinearSet& b, double tol = Tolerances{}.fpk);

struct Witness {
  Spinor spinor;
  DualOperator dual;
  BilinearSet bilinears;
  LounestoLabel label;
  ConstraintCheck constraints;
  /// Position in the search order (pool entries first).
  std::uint64_t trial = 0;
  bool from_pool = false;
};

struct WitnessOptions {
  std::uint64_t budget = 2000;
  std::uint64_t seed = 0;
  Tolerances tol{};
  /// Try Dirac/Elko/chiral spinors before random projected samples.
  bool use_pools = true;
};

/// Throws std::invalid_argument for a non-allowed target or an empty dual list, NotFound when
/// the budget is exhausted (which says nothing about whether the subclass is empty).
Witness find_witness(const LounestoLabel& target, const std::vector<DualOperator>& duals,
                     const WitnessOptions& options);

/// Distinct operators (up to equality of matrix and antilinearity) passing the constraint in
/// the rest-frame grid.
std::vector<DualOperator> admissible_duals(AntilinearConvention convention = AntilinearConvention::Dagger);

struct CensusRow {
  std::string dual;
  std::map<std::string, std::uint64_t> counts;
};

std::vector<CensusRow> census(const std::vector<DualOperator>& duals, std::uint64_t trials, std::uint64_t seed,
                              double tol = Tolerances{}.cls);

std::string tables_markdown();

}  // namespace lounesto
