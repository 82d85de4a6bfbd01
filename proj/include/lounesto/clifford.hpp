#pragma once

// Spacetime Clifford algebra Cl(1,3) in the chiral (Weyl) representation:
//
//   gamma_0 = [[0, 1], [1, 0]],   gamma_i = [[0, sigma_i], [-sigma_i, 0]]
//
// with {gamma_mu, gamma_nu} = 2 eta_mu nu, eta = diag(+1, -1, -1, -1).
// The matrices above carry lower indices; gamma^mu = eta^mu mu gamma_mu.

#include <array>
#include <string>
#include <vector>

#include "lounesto/kinematics.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

Matrix4 gamma(int mu);
Matrix4 gamma_upper(int mu);

/// gamma_0 gamma_1 gamma_2 gamma_3; squares to -1.
Matrix4 gamma0123();

/// -i gamma_0123.
Matrix4 gamma5();

/// gamma_mu p^mu (the "p-slash" of a contravariant momentum).
Matrix4 slash(const FourVector& p);
Matrix4 slash(const Momentum& p);

/// Levi-Civita symbol with lower indices, eps_0123 = +1.
int epsilon(int a, int b, int c, int d);

/// Same symbol with all indices raised: eps^0123 = -1.
int epsilon_upper(int a, int b, int c, int d);

enum class Grade { Scalar, Vector, Bivector, AxialVector, Pseudoscalar };

/// One of the 16 Clifford basis slots {1, g_mu, g_mu g_nu (mu<nu), g_mu g_0123, g_0123}.
struct CliffordIndex {
  Grade grade = Grade::Scalar;
  int mu = -1;
  int nu = -1;

  static CliffordIndex scalar() { return {}; }
  static CliffordIndex vector(int mu);
  static CliffordIndex bivector(int mu, int nu);
  static CliffordIndex axial(int mu);
  static CliffordIndex pseudoscalar() { return {Grade::Pseudoscalar, -1, -1}; }

  /// Position 0..15 in the canonical ordering used by CliffordCoefficients.
  int ordinal() const;
  std::string name() const;

  friend bool operator==(const CliffordIndex&, const CliffordIndex&) = default;
};

/// All 16 indices in canonical order: scalar, 4 vectors, 6 bivectors, 4 axials, pseudoscalar.
const std::array<CliffordIndex, 16>& clifford_indices();

Matrix4 basis_element(const CliffordIndex& index);

/// Inverse of a basis element; each squares to +1 or -1.
Matrix4 basis_inverse(const CliffordIndex& index);

struct CliffordCoefficients {
  std::array<Complex, 16> values{};

  Complex& operator[](const CliffordIndex& index) { return values[index.ordinal()]; }
  const Complex& operator[](const CliffordIndex& index) const { return values[index.ordinal()]; }

  Matrix4 reconstruct() const;
};

/// Trace projection c_I = tr(Gamma_I^-1 M) / 4.
CliffordCoefficients decompose(const Matrix4& m);

/// Boost generator K_i = gamma_i gamma_0 / 2 for i in 1..3; exp(phi n.K) boosts along n.
Matrix4 boost_generator(int i);

/// (m + gamma.p gamma_0) / sqrt(2m(E+m)); maps rest-frame spinors to momentum p.
Matrix4 boost(const Momentum& p);

enum class EtaReality {
  /// eta has real entries; matches the block form with independent real n and m.
  RealEntries,
  /// eta is hermitian, so psi^dag eta psi is real for every psi.
  Hermitian,
};

struct EtaFamily {
  /// Real basis of the solution space, in reduced row-echelon order.
  std::vector<Matrix4> basis;
  int real_dimension() const { return static_cast<int>(basis.size()); }
  /// Frobenius distance from `m` to the real span of the basis.
  double distance_to_span(const Matrix4& m) const;
};

/// Solves {K_i, eta} = 0 (i = 1,2,3) with the chosen reality condition as a
/// real null-space problem over the 32 real parameters of eta; optionally also
/// imposes parity invariance gamma_0 eta gamma_0 = eta.
EtaFamily derive_eta(bool impose_parity, EtaReality reality = EtaReality::RealEntries);

bool is_finite(const Matrix4& m);

}  // namespace lounesto
