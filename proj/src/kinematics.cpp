#include "lounesto/kinematics.hpp"

#include <cmath>
#include <string>

namespace lounesto {

Momentum Momentum::on_shell(double px, double py, double pz, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("mass must be finite and > 0, got " + std::to_string(mass));
  }
  if (!std::isfinite(px) || !std::isfinite(py) || !std::isfinite(pz)) {
    throw std::invalid_argument("spatial momentum must be finite");
  }
  const double energy = std::sqrt(px * px + py * py + pz * pz + mass * mass);
  return Momentum({energy, px, py, pz}, mass);
}

Momentum Momentum::from_components(const FourVector& p, double mass, double shell_tolerance) {
  Momentum expected = on_shell(p[1], p[2], p[3], mass);
  if (!(p[0] > 0.0)) {
    throw std::invalid_argument("off-shell momentum: p^0 must be positive");
  }
  if (std::abs(p[0] - expected.energy()) > shell_tolerance * expected.energy()) {
    throw std::invalid_argument("off-shell momentum: p^0 = " + std::to_string(p[0]) +
                                " but sqrt(|p|^2 + m^2) = " + std::to_string(expected.energy()));
  }
  return expected;
}

double Momentum::spatial_norm() const {
  return std::sqrt(p_[1] * p_[1] + p_[2] * p_[2] + p_[3] * p_[3]);
}

Momentum Momentum::scaled(double factor) const {
  return on_shell(factor * p_[1], factor * p_[2], factor * p_[3], factor * mass_);
}

}  // namespace lounesto
