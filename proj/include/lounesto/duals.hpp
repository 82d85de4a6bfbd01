#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lounesto/kinematics.hpp"
#include "lounesto/symmetry.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

/// How gamma_0 Delta^dag gamma_0 = Delta is read when Delta = M K is antilinear.
enum class AntilinearConvention {
  /// gamma_0 M^dag gamma_0 = M on the matrix part (same test as the linear case).
  Dagger,
  /// gamma_0 M^T gamma_0 = M.
  Transpose,
};

std::string to_string(AntilinearConvention c);
std::optional<AntilinearConvention> parse_convention(const std::string& text);

/// 2x2 blocks of Delta = [[A, B], [C, D]].
struct BlockForm {
  Matrix2 a, b, c, d;
  double b_hermitian_defect = 0.0;
  double c_hermitian_defect = 0.0;
  /// |D - A^dag|
  double d_defect = 0.0;
};

BlockForm block_form(const Matrix4& m);

struct ConstraintReport {
  bool pass = false;
  double residual = 0.0;
  /// Present when the check passes.
  std::optional<BlockForm> blocks;
};

ConstraintReport constraint_check(const SymOperator& delta,
                                  AntilinearConvention convention = AntilinearConvention::Dagger,
                                  double tol = Tolerances{}.zero);

struct DualOperator {
  SymOperator op;
  std::string label;
  bool admissible = false;
};

/// Wraps `op` and caches the constraint verdict.
DualOperator make_dual(const SymOperator& op, AntilinearConvention convention = AntilinearConvention::Dagger,
                       double tol = Tolerances{}.zero);

/// [Delta psi]^dag gamma_0.
Covector4 dual(const Vector4c& psi, const SymOperator& delta);
Covector4 dual(const Vector4c& psi, const DualOperator& delta);

/// Parses "1", "I", "-1", "CT", "g0", "g52", "g05", "CT*g51", "P*g01". A gamma word
/// "gXY.." is the ordered product of gamma_X gamma_Y ..., digit 5 meaning gamma_5.
SymOperator parse_operator(const std::string& text, const Momentum& p);

/// gamma product for a word such as "05" or "12"; throws on bad digits.
Matrix4 gamma_word(const std::string& digits);

struct ViabilityOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = Tolerances{}.fpk;
};

/// All four quadratic identities on `trials` random (regular-generic) spinors.
bool fpk_viability(const SymOperator& delta, const ViabilityOptions& options);

/// Same test on singular (Elko-type) spinors at random momenta; reported separately.
bool singular_fpk_viability(const SymOperator& delta, const ViabilityOptions& options);

inline constexpr std::array<const char*, 14> kGridColumns{"1",  "P",  "C",  "T",  "CP", "CT",  "PT",
                                                          "CPT", "g0", "gi", "g5", "g0i", "gij", "g5i"};

struct Candidate {
  DualOperator dual;
  /// Cell entry text: "-CP", "g52", ...
  std::string entry;
  bool constraint = false;
  bool fpk = false;
  bool singular_fpk = false;
};

struct CandidateGrid {
  std::array<std::array<std::vector<Candidate>, 14>, 8> cells;
  std::size_t total() const;
};

CandidateGrid enumerate_candidates(const Momentum& p,
                                   AntilinearConvention convention = AntilinearConvention::Dagger);

using EntrySets = std::array<std::array<std::set<std::string>, 14>, 8>;

struct AdmissibleGrid {
  /// Every candidate with its verdicts filled in.
  CandidateGrid evaluated;
  /// Entries passing both the constraint and FPK viability.
  EntrySets survivors;

  std::string markdown() const;
  std::string csv() const;
};

AdmissibleGrid filter_admissible(const CandidateGrid& grid, const ViabilityOptions& options);

/// Published admissible set, in Candidate::entry vocabulary.
const EntrySets& reference_admissible_table();

struct CellMismatch {
  std::string row, column;
  std::set<std::string> measured, expected;
};

std::vector<CellMismatch> compare_cells(const EntrySets& measured, const EntrySets& expected);

/// Weighted sum of same-class admissible operators; throws std::invalid_argument on
/// mixed antilinearity, on an inadmissible input, or on size mismatch.
DualOperator sum_duals(const std::vector<DualOperator>& deltas, const std::vector<double>& weights,
                       AntilinearConvention convention = AntilinearConvention::Dagger,
                       double tol = Tolerances{}.zero);

}  // namespace lounesto
