#pragma once

#include <array>

#include "lounesto/types.hpp"

namespace lounesto {

/// On-shell four-momentum of a massive particle with positive energy.
class Momentum {
 public:
  /// Builds p = (sqrt(|p|^2 + m^2), px, py, pz).
  static Momentum on_shell(double px, double py, double pz, double mass);

  /// Validates an explicit four-vector; throws std::invalid_argument when
  /// p^0 is not the positive root within `shell_tolerance` (relative).
  static Momentum from_components(const FourVector& p, double mass,
                                  double shell_tolerance = Tolerances{}.shell);

  static Momentum rest(double mass) { return on_shell(0.0, 0.0, 0.0, mass); }

  const FourVector& components() const { return p_; }
  double energy() const { return p_[0]; }
  double mass() const { return mass_; }
  double px() const { return p_[1]; }
  double py() const { return p_[2]; }
  double pz() const { return p_[3]; }
  double spatial_norm() const;

  /// Same mass, spatial momentum reversed.
  Momentum reflected() const { return on_shell(-p_[1], -p_[2], -p_[3], mass_); }

  /// Spatial momentum and mass scaled by the same factor.
  Momentum scaled(double factor) const;

 private:
  Momentum(const FourVector& p, double mass) : p_(p), mass_(mass) {}

  FourVector p_;
  double mass_;
};

/// Minkowski metric diagonal, mostly negative.
inline constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

}  // namespace lounesto
