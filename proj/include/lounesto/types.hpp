#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lounesto {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;
using Covector4 = Eigen::Matrix<Complex, 1, 4>;
using Vector2c = Eigen::Matrix<Complex, 2, 1>;

/// Real contravariant four-vector (p^0, p^1, p^2, p^3).
using FourVector = std::array<double, 4>;

/// Numerical thresholds. All are relative to a quantity-specific scale except
/// `zero`, which is absolute on unit-scale matrices.
struct Tolerances {
  double zero = 1e-10;
  double fpk = 1e-8;
  double cls = 1e-8;
  double fit = 1e-7;
  double shell = 1e-9;
};

inline constexpr Complex kI{0.0, 1.0};

/// Raised when a bounded search ends without a result that meets its contract.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lounesto
