#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lounesto/spinors.hpp"
#include "lounesto/symmetry.hpp"

namespace lounesto {

/// Sum of psi * dual(psi) over the given spinors.
Matrix4 spin_sum(const std::vector<Spinor>& members, const SymOperator& delta);

struct PropagatorCore {
  Matrix4 S_of_p;
  Momentum momentum;
};

using FamilyBuilder = std::function<SpinorFamily(const Momentum&)>;
using DualBuilder = std::function<SymOperator(const Momentum&)>;

FamilyBuilder family_builder(FamilyKind kind, const OctetPhases& phases = pinned_octet_phases(),
                             OctetPolicy policy = OctetPolicy::Strict);
DualBuilder dual_builder(Discrete d);

/// (1/2E) [ sum_S psi(p) dual(p) (p0 + E) + sum_A psi(-p) dual(-p) (p0 - E) ], p0 defaulting to E.
PropagatorCore propagator_core(const Momentum& p, const FamilyBuilder& family, const DualBuilder& delta,
                               std::optional<double> p0 = std::nullopt);

enum class CovarianceVerdict { Covariant, CovariantStar, NonCovariant, Error };

std::string to_string(CovarianceVerdict v);

/// Momentum-independent coefficients of a 1 + b g5 + c gamma.p + d g5 gamma.p.
struct FitCoefficients {
  Complex a, b, c, d;
};

struct SpinSumReport {
  std::vector<Matrix4> sums;
  FitCoefficients fit{};
  double residual = 0.0;
  CovarianceVerdict verdict = CovarianceVerdict::Error;
  std::string error;
};

/// Joint least-squares fit over the probes; residual relative to the stacked sums.
SpinSumReport covariance_analysis(const FamilyBuilder& family, const DualBuilder& delta,
                                  const std::vector<Momentum>& probes, double fit_tol = Tolerances{}.fit);

/// Whether a starred fit has the advertised shape: lambda (gamma.p +- m g5) for the regular
/// family, +- lambda m g5 for the degenerate family. Returns a description of the measured form.
struct StarForm {
  bool matches = false;
  std::string measured;
};
StarForm star_form(const SpinSumReport& report, FamilyKind kind, double mass, double tol = Tolerances{}.fit);

struct TableVOptions {
  std::vector<Momentum> probes;
  OctetPhases octet = pinned_octet_phases();
  OctetPolicy policy = OctetPolicy::Strict;
  double fit_tol = Tolerances{}.fit;
};

struct TableV {
  /// cells[dual][family] with family order regular, singular, degenerate.
  std::array<std::array<SpinSumReport, 3>, 8> cells;

  /// "✓", "✓*", "✗" or "Error".
  static std::string symbol(CovarianceVerdict v);
  std::string markdown() const;
  std::string csv() const;
};

TableV table_v(const TableVOptions& options);

/// Published grid in TableV::symbol vocabulary.
const std::array<std::array<std::string, 3>, 8>& reference_table_v();

// Displayed closed forms for Delta = CT and T, as functions of p (with E = p^0).
Matrix4 reference_ct_regular_spin_sum(const Momentum& p);
Matrix4 reference_ct_regular_core(const Momentum& p);
Matrix4 reference_ct_singular_spin_sum(const Momentum& p);
Matrix4 reference_ct_singular_core(const Momentum& p);
Matrix4 reference_octet_core(const Momentum& p);
Matrix4 reference_t_singular_spin_sum(const Momentum& p);

/// Necessary conditions for some set of at most `members` spinors to have spin sum `target`
/// under `delta`: with N = target (M^dag g0)^-1, N must be symmetric (antilinear delta) or
/// hermitian positive semidefinite (linear delta), and rank N <= members.
struct Realizability {
  double symmetry_defect = 0.0;
  double min_eigenvalue = 0.0;
  int rank = 0;
  bool realizable = false;
};
Realizability spin_sum_realizability(const Matrix4& target, const SymOperator& delta, int members,
                                     double tol = 1e-9);

/// Max entrywise |a - b| relative to max |b|.
double relative_difference(const Matrix4& a, const Matrix4& b);

}  // namespace lounesto
