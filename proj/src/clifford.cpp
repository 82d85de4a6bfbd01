#include "lounesto/clifford.hpp"

#include <algorithm>
#include <cmath>

namespace lounesto {
namespace {

void check_index(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("spacetime index must be in 0..3, got " + std::to_string(mu));
  }
}

Matrix2 pauli(int i) {
  Matrix2 s = Matrix2::Zero();
  switch (i) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -kI, kI, 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw std::invalid_argument("pauli index must be 1..3");
  }
  return s;
}

Matrix4 blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c, const Matrix2& d) {
  Matrix4 m;
  m.topLeftCorner<2, 2>() = a;
  m.topRightCorner<2, 2>() = b;
  m.bottomLeftCorner<2, 2>() = c;
  m.bottomRightCorner<2, 2>() = d;
  return m;
}

std::array<Matrix4, 4> make_gammas() {
  const Matrix2 zero = Matrix2::Zero();
  const Matrix2 one = Matrix2::Identity();
  std::array<Matrix4, 4> g;
  g[0] = blocks(zero, one, one, zero);
  for (int i = 1; i <= 3; ++i) g[i] = blocks(zero, pauli(i), -pauli(i), zero);
  return g;
}

const std::array<Matrix4, 4>& gammas() {
  static const std::array<Matrix4, 4> g = make_gammas();
  return g;
}

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// Matrix4 <-> 32 real coordinates, entry-major with (re, im) interleaved.
Eigen::VectorXd to_real(const Matrix4& m) {
  Eigen::VectorXd v(32);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      v(2 * (4 * r + c)) = m(r, c).real();
      v(2 * (4 * r + c) + 1) = m(r, c).imag();
    }
  }
  return v;
}

Matrix4 from_real(const Eigen::VectorXd& v) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(v(2 * (4 * r + c)), v(2 * (4 * r + c) + 1));
  }
  return m;
}

// Real matrix of the R-linear map eta -> f(eta), one column per real coordinate.
template <typename F>
Eigen::MatrixXd real_operator(F&& f) {
  Eigen::MatrixXd a(32, 32);
  for (int k = 0; k < 32; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(32);
    e(k) = 1.0;
    a.col(k) = to_real(f(from_real(e)));
  }
  return a;
}

Eigen::MatrixXd reduced_row_echelon(Eigen::MatrixXd rows) {
  const double eps = 1e-12;
  int lead = 0;
  const int n_rows = static_cast<int>(rows.rows());
  const int n_cols = static_cast<int>(rows.cols());
  for (int r = 0; r < n_rows && lead < n_cols; ++r, ++lead) {
    int pivot = r;
    while (true) {
      Eigen::Index best = 0;
      rows.col(lead).segment(r, n_rows - r).cwiseAbs().maxCoeff(&best);
      pivot = r + static_cast<int>(best);
      if (std::abs(rows(pivot, lead)) > eps) break;
      if (++lead == n_cols) return rows;
    }
    rows.row(pivot).swap(rows.row(r));
    rows.row(r) /= rows(r, lead);
    for (int i = 0; i < n_rows; ++i) {
      if (i != r) rows.row(i) -= rows(i, lead) * rows.row(r);
    }
  }
  rows = rows.unaryExpr([eps](double x) { return std::abs(x) < eps ? 0.0 : x; });
  return rows;
}

}  // namespace

Matrix4 gamma(int mu) {
  check_index(mu);
  return gammas()[mu];
}

Matrix4 gamma_upper(int mu) {
  check_index(mu);
  return kMetric[mu] * gammas()[mu];
}

Matrix4 gamma0123() {
  const auto& g = gammas();
  return g[0] * g[1] * g[2] * g[3];
}

Matrix4 gamma5() { return -kI * gamma0123(); }

Matrix4 slash(const FourVector& p) {
  const auto& g = gammas();
  return g[0] * p[0] + g[1] * p[1] + g[2] * p[2] + g[3] * p[3];
}

Matrix4 slash(const Momentum& p) { return slash(p.components()); }

int epsilon(int a, int b, int c, int d) {
  for (int x : {a, b, c, d}) check_index(x);
  return permutation_sign({a, b, c, d});
}

int epsilon_upper(int a, int b, int c, int d) { return -epsilon(a, b, c, d); }

CliffordIndex CliffordIndex::vector(int mu) {
  check_index(mu);
  return {Grade::Vector, mu, -1};
}

CliffordIndex CliffordIndex::bivector(int mu, int nu) {
  check_index(mu);
  check_index(nu);
  if (!(mu < nu)) throw std::invalid_argument("bivector indices must satisfy mu < nu");
  return {Grade::Bivector, mu, nu};
}

CliffordIndex CliffordIndex::axial(int mu) {
  check_index(mu);
  return {Grade::AxialVector, mu, -1};
}

int CliffordIndex::ordinal() const {
  switch (grade) {
    case Grade::Scalar:
      return 0;
    case Grade::Vector:
      return 1 + mu;
    case Grade::Bivector: {
      // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
      static constexpr int offset[3] = {0, 3, 5};
      return 5 + offset[mu] + (nu - mu - 1);
    }
    case Grade::AxialVector:
      return 11 + mu;
    case Grade::Pseudoscalar:
      return 15;
  }
  return -1;
}

std::string CliffordIndex::name() const {
  switch (grade) {
    case Grade::Scalar:
      return "1";
    case Grade::Vector:
      return "g" + std::to_string(mu);
    case Grade::Bivector:
      return "g" + std::to_string(mu) + std::to_string(nu);
    case Grade::AxialVector:
      return "g" + std::to_string(mu) + "g0123";
    case Grade::Pseudoscalar:
      return "g0123";
  }
  return "?";
}

const std::array<CliffordIndex, 16>& clifford_indices() {
  static const std::array<CliffordIndex, 16> all = [] {
    std::array<CliffordIndex, 16> out{};
    out[0] = CliffordIndex::scalar();
    for (int mu = 0; mu < 4; ++mu) out[1 + mu] = CliffordIndex::vector(mu);
    int k = 5;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) out[k++] = CliffordIndex::bivector(mu, nu);
    }
    for (int mu = 0; mu < 4; ++mu) out[11 + mu] = CliffordIndex::axial(mu);
    out[15] = CliffordIndex::pseudoscalar();
    return out;
  }();
  return all;
}

Matrix4 basis_element(const CliffordIndex& index) {
  const auto& g = gammas();
  switch (index.grade) {
    case Grade::Scalar:
      return Matrix4::Identity();
    case Grade::Vector:
      return g[index.mu];
    case Grade::Bivector:
      return g[index.mu] * g[index.nu];
    case Grade::AxialVector:
      return g[index.mu] * gamma0123();
    case Grade::Pseudoscalar:
      return gamma0123();
  }
  throw std::invalid_argument("invalid Clifford index");
}

Matrix4 basis_inverse(const CliffordIndex& index) {
  const Matrix4 e = basis_element(index);
  // e^2 = s * 1 with s = +-1, so e^-1 = s * e.
  const Complex s = (e * e)(0, 0);
  return e / s;
}

Matrix4 CliffordCoefficients::reconstruct() const {
  Matrix4 m = Matrix4::Zero();
  for (const auto& index : clifford_indices()) m += values[index.ordinal()] * basis_element(index);
  return m;
}

CliffordCoefficients decompose(const Matrix4& m) {
  CliffordCoefficients out;
  for (const auto& index : clifford_indices()) {
    out[index] = (basis_inverse(index) * m).trace() / 4.0;
  }
  return out;
}

Matrix4 boost_generator(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("boost generator index must be 1..3");
  return 0.5 * gamma(i) * gamma(0);
}

Matrix4 boost(const Momentum& p) {
  const double m = p.mass();
  const double norm = std::sqrt(2.0 * m * (p.energy() + m));
  return (m * Matrix4::Identity() + slash(p) * gamma(0)) / norm;
}

double EtaFamily::distance_to_span(const Matrix4& m) const {
  if (basis.empty()) return to_real(m).norm();
  Eigen::MatrixXd a(32, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = to_real(basis[k]);
  const Eigen::VectorXd b = to_real(m);
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  return (a * x - b).norm();
}

EtaFamily derive_eta(bool impose_parity, EtaReality reality) {
  std::vector<Eigen::MatrixXd> constraints;
  for (int i = 1; i <= 3; ++i) {
    const Matrix4 k = boost_generator(i);
    constraints.push_back(real_operator([&](const Matrix4& eta) -> Matrix4 { return k * eta + eta * k; }));
  }
  if (reality == EtaReality::RealEntries) {
    constraints.push_back(real_operator([](const Matrix4& eta) -> Matrix4 {
      return Matrix4(eta.imag().cast<Complex>());
    }));
  } else {
    constraints.push_back(real_operator([](const Matrix4& eta) -> Matrix4 {
      return eta - eta.adjoint();
    }));
  }
  if (impose_parity) {
    const Matrix4 g0 = gamma(0);
    constraints.push_back(real_operator([&](const Matrix4& eta) -> Matrix4 { return g0 * eta * g0 - eta; }));
  }

  Eigen::MatrixXd stacked(32 * static_cast<Eigen::Index>(constraints.size()), 32);
  for (std::size_t k = 0; k < constraints.size(); ++k) stacked.middleRows(32 * static_cast<Eigen::Index>(k), 32) = constraints[k];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sv(0));
  std::vector<Eigen::VectorXd> null_vectors;
  for (int k = 0; k < 32; ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s <= cutoff) null_vectors.push_back(svd.matrixV().col(k));
  }

  EtaFamily family;
  if (null_vectors.empty()) return family;
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(null_vectors.size()), 32);
  for (std::size_t k = 0; k < null_vectors.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = null_vectors[k].transpose();
  rows = reduced_row_echelon(rows);
  for (Eigen::Index k = 0; k < rows.rows(); ++k) family.basis.push_back(from_real(rows.row(k).transpose()));
  return family;
}

bool is_finite(const Matrix4& m) {
  return m.unaryExpr([](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }).all();
}

}  // namespace lounesto
