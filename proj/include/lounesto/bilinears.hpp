#pragma once

#include <array>
#include <string>

#include "lounesto/duals.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

/// Pair (mu, nu), mu < nu, at storage slot k of BilinearSet::S.
inline constexpr std::array<std::array<int, 2>, 6> kBivectorPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Complex bilinear covariants of one spinor with one dual. All vectors lower-index.
struct BilinearSet {
  Complex sigma{};
  Complex omega{};
  std::array<Complex, 4> J{};
  std::array<Complex, 4> K{};
  /// S_mu nu for mu < nu in kBivectorPairs order.
  std::array<Complex, 6> S{};

  /// Full antisymmetric S_mu nu.
  Complex s(int mu, int nu) const;
};

/// sigma = z psi, omega = -z g0123 psi, J_mu = z g_mu psi, K_mu = z i g0123 g_mu psi,
/// S_mu nu = z i g_mu g_nu psi, with z the dual row.
BilinearSet bilinears(const Vector4c& psi, const Covector4& zeta);
BilinearSet bilinears(const Vector4c& psi, const SymOperator& delta);
BilinearSet bilinears(const Vector4c& psi, const DualOperator& delta);

/// eta^mu nu a_mu b_nu, no conjugation.
Complex minkowski_dot(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);

inline constexpr std::array<const char*, 4> kFpkNames{"J2-s2-w2", "K2+J2", "J.K", "JK-KJ+wS+s*eS/2"};

struct FpkReport {
  std::array<double, 4> residuals{};
  double scale = 1.0;
  std::array<bool, 4> pass{};

  bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
  /// Largest residual / scale.
  double worst() const;
};

/// Residuals of J^2 = s^2 + w^2, K^2 = -J^2, J.K = 0 and
/// J_mu K_nu - K_mu J_nu = -w S_mu nu - (s/2) eps_mu nu a b S^a b,
/// relative to max(|s|^2, |w|^2, |J|^2, |K|^2, |S|^2).
FpkReport fpk_check(const BilinearSet& b, double tol = Tolerances{}.fpk);

struct FierzAggregate {
  Matrix4 Z;
  BilinearSet source;
};

/// Z = s + J_mu g^mu + i sum_{mu<nu} S_mu nu g^mu g^nu + i K_mu g^mu g0123 + w g0123,
/// normalized so that tr(Z g_mu) = 4 J_mu etc.
FierzAggregate fierz_aggregate(const BilinearSet& b);

/// |Z^2 - 4 s Z| <= tol * max(|Z|^2, tiny).
bool boomerang_check(const FierzAggregate& z, double tol = Tolerances{}.fpk);

struct IdentityReport {
  std::array<const char*, 5> names{};
  std::array<double, 5> residuals{};
  double tol = 0.0;

  bool all_pass() const;
  double worst() const;
};

/// Z^2 = 4sZ, Z g_mu Z = 4J_mu Z, Z i g_mu nu Z = 4S_mu nu Z, Z i g0123 g_mu Z = 4K_mu Z,
/// Z g0123 Z = -4wZ; residuals relative to |Z|^2.
IdentityReport aggregate_identities_check(const FierzAggregate& z, double tol = Tolerances{}.fpk);

/// tr(Z) = 4s, tr(Z g_mu) = 4J_mu, tr(Z i g_mu nu) = 4S_mu nu, tr(Z i g0123 g_mu) = 4K_mu,
/// tr(Z g0123) = -4w; residuals relative to the bilinear scale.
IdentityReport trace_identities_check(const FierzAggregate& z, double tol = Tolerances{}.zero);

}  // namespace lounesto
