#include "lounesto/bilinears.hpp"

#include <algorithm>
#include <cmath>

#include "lounesto/clifford.hpp"

namespace lounesto {
namespace {

double sq(const Complex& z) { return std::norm(z); }

template <std::size_t N>
double sq(const std::array<Complex, N>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

double bilinear_scale(const BilinearSet& b) {
  return std::max({sq(b.sigma), sq(b.omega), sq(b.J), sq(b.K), sq(b.S), 1e-300});
}

double frob2(const Matrix4& m) { return std::max(m.squaredNorm(), 1e-300); }

}  // namespace

Complex BilinearSet::s(int mu, int nu) const {
  if (mu == nu) return {};
  const bool flip = mu > nu;
  const int a = flip ? nu : mu;
  const int c = flip ? mu : nu;
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    if (kBivectorPairs[k][0] == a && kBivectorPairs[k][1] == c) return flip ? -S[k] : S[k];
  }
  throw std::invalid_argument("bivector index out of range");
}

BilinearSet bilinears(const Vector4c& psi, const Covector4& zeta) {
  const Matrix4 g0123 = gamma0123();
  BilinearSet b;
  b.sigma = (zeta * psi)(0, 0);
  b.omega = -(zeta * g0123 * psi)(0, 0);
  for (int mu = 0; mu < 4; ++mu) {
    b.J[mu] = (zeta * gamma(mu) * psi)(0, 0);
    b.K[mu] = (zeta * (kI * g0123 * gamma(mu)) * psi)(0, 0);
  }
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    const auto [mu, nu] = kBivectorPairs[k];
    b.S[k] = (zeta * (kI * gamma(mu) * gamma(nu)) * psi)(0, 0);
  }
  return b;
}

BilinearSet bilinears(const Vector4c& psi, const SymOperator& delta) { return bilinears(psi, dual(psi, delta)); }

BilinearSet bilinears(const Vector4c& psi, const DualOperator& delta) { return bilinears(psi, delta.op); }

Complex minkowski_dot(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex s{};
  for (int mu = 0; mu < 4; ++mu) s += kMetric[mu] * a[mu] * b[mu];
  return s;
}

double FpkReport::worst() const { return *std::max_element(residuals.begin(), residuals.end()) / scale; }

FpkReport fpk_check(const BilinearSet& b, double tol) {
  FpkReport r;
  r.scale = bilinear_scale(b);
  const Complex j2 = minkowski_dot(b.J, b.J);
  r.residuals[0] = std::abs(j2 - b.sigma * b.sigma - b.omega * b.omega);
  r.residuals[1] = std::abs(minkowski_dot(b.K, b.K) + j2);
  r.residuals[2] = std::abs(minkowski_dot(b.J, b.K));
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Complex dual_term{};
      for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
          const int e = epsilon(mu, nu, a, c);
          if (e != 0) dual_term += static_cast<double>(e) * kMetric[a] * kMetric[c] * b.s(a, c);
        }
      }
      const Complex lhs = b.J[mu] * b.K[nu] - b.K[mu] * b.J[nu] + b.omega * b.s(mu, nu) + 0.5 * b.sigma * dual_term;
      worst = std::max(worst, std::abs(lhs));
    }
  }
  r.residuals[3] = worst;
  for (int i = 0; i < 4; ++i) r.pass[i] = r.residuals[i] <= tol * r.scale;
  return r;
}

FierzAggregate fierz_aggregate(const BilinearSet& b) {
  const Matrix4 g0123 = gamma0123();
  Matrix4 z = b.sigma * Matrix4::Identity() + b.omega * g0123;
  for (int mu = 0; mu < 4; ++mu) {
    z += b.J[mu] * gamma_upper(mu);
    z += kI * b.K[mu] * gamma_upper(mu) * g0123;
  }
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    const auto [mu, nu] = kBivectorPairs[k];
    z += kI * b.S[k] * gamma_upper(mu) * gamma_upper(nu);
  }
  return {z, b};
}

bool boomerang_check(const FierzAggregate& z, double tol) {
  const Matrix4& m = z.Z;
  return (m * m - 4.0 * z.source.sigma * m).squaredNorm() <= tol * tol * frob2(m) * frob2(m);
}

bool IdentityReport::all_pass() const {
  return std::all_of(residuals.begin(), residuals.end(), [this](double r) { return r <= tol; });
}

double IdentityReport::worst() const { return *std::max_element(residuals.begin(), residuals.end()); }

IdentityReport aggregate_identities_check(const FierzAggregate& agg, double tol) {
  const Matrix4& z = agg.Z;
  const BilinearSet& b = agg.source;
  const Matrix4 g0123 = gamma0123();
  const double scale = std::sqrt(frob2(z) * frob2(z));
  auto rel = [&](const Matrix4& m) { return m.norm() / scale; };

  IdentityReport r;
  r.tol = tol;
  r.names = {"Z2=4sZ", "ZgZ=4JZ", "ZiSZ=4SZ", "ZiKZ=4KZ", "Zg0123Z=-4wZ"};
  r.residuals[0] = rel(z * z - 4.0 * b.sigma * z);
  for (int mu = 0; mu < 4; ++mu) {
    r.residuals[1] = std::max(r.residuals[1], rel(z * gamma(mu) * z - 4.0 * b.J[mu] * z));
    r.residuals[3] = std::max(r.residuals[3], rel(z * (kI * g0123 * gamma(mu)) * z - 4.0 * b.K[mu] * z));
  }
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    const auto [mu, nu] = kBivectorPairs[k];
    r.residuals[2] = std::max(r.residuals[2], rel(z * (kI * gamma(mu) * gamma(nu)) * z - 4.0 * b.S[k] * z));
  }
  r.residuals[4] = rel(z * g0123 * z + 4.0 * b.omega * z);
  return r;
}

IdentityReport trace_identities_check(const FierzAggregate& agg, double tol) {
  const Matrix4& z = agg.Z;
  const BilinearSet& b = agg.source;
  const Matrix4 g0123 = gamma0123();
  const double scale = std::sqrt(bilinear_scale(b));

  IdentityReport r;
  r.tol = tol;
  r.names = {"tr Z=4s", "tr Zg=4J", "tr ZiS=4S", "tr ZiK=4K", "tr Zg0123=-4w"};
  r.residuals[0] = std::abs(z.trace() - 4.0 * b.sigma) / scale;
  for (int mu = 0; mu < 4; ++mu) {
    r.residuals[1] = std::max(r.residuals[1], std::abs((z * gamma(mu)).trace() - 4.0 * b.J[mu]) / scale);
    r.residuals[3] =
        std::max(r.residuals[3], std::abs((z * (kI * g0123 * gamma(mu))).trace() - 4.0 * b.K[mu]) / scale);
  }
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    const auto [mu, nu] = kBivectorPairs[k];
    r.residuals[2] =
        std::max(r.residuals[2], std::abs((z * (kI * gamma(mu) * gamma(nu))).trace() - 4.0 * b.S[k]) / scale);
  }
  r.residuals[4] = std::abs((z * g0123).trace() + 4.0 * b.omega) / scale;
  return r;
}

}  // namespace lounesto
