#include "lounesto/spinsum.hpp"

#include <cmath>
#include <sstream>

#include "lounesto/clifford.hpp"
#include "lounesto/duals.hpp"

namespace lounesto {
namespace {

std::string complex_text(const Complex& z) {
  std::ostringstream out;
  out.precision(6);
  out << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  return out.str();
}

}  // namespace

Matrix4 spin_sum(const std::vector<Spinor>& members, const SymOperator& delta) {
  Matrix4 sum = Matrix4::Zero();
  for (const auto& s : members) sum += s.components * dual(s.components, delta);
  return sum;
}

FamilyBuilder family_builder(FamilyKind kind, const OctetPhases& phases, OctetPolicy policy) {
  switch (kind) {
    case FamilyKind::Regular:
      return [](const Momentum& p) { return regular_family(p); };
    case FamilyKind::Singular:
      return [](const Momentum& p) { return singular_family(p); };
    case FamilyKind::SingularDegenerate:
      return [phases, policy](const Momentum& p) { return elko_degenerate_octet(p, phases, policy); };
  }
  throw std::invalid_argument("unknown family kind");
}

DualBuilder dual_builder(Discrete d) {
  return [d](const Momentum& p) { return discrete_operator(d, p); };
}

PropagatorCore propagator_core(const Momentum& p, const FamilyBuilder& family, const DualBuilder& delta,
                               std::optional<double> p0) {
  const double e = p.energy();
  const double q0 = p0.value_or(e);
  const SpinorFamily here = family(p);
  const Momentum reflected = p.reflected();
  const SpinorFamily there = family(reflected);
  const Matrix4 particles = spin_sum(here.particles, delta(p));
  const Matrix4 antiparticles = spin_sum(there.antiparticles, delta(reflected));
  return {(particles * (q0 + e) + antiparticles * (q0 - e)) / (2.0 * e), p};
}

std::string to_string(CovarianceVerdict v) {
  switch (v) {
    case CovarianceVerdict::Covariant:
      return "covariant";
    case CovarianceVerdict::CovariantStar:
      return "covariant*";
    case CovarianceVerdict::NonCovariant:
      return "non-covariant";
    case CovarianceVerdict::Error:
      return "error";
  }
  return "?";
}

SpinSumReport covariance_analysis(const FamilyBuilder& family, const DualBuilder& delta,
                                  const std::vector<Momentum>& probes, double fit_tol) {
  if (probes.size() < 2) throw std::invalid_argument("covariance analysis needs at least two probe momenta");
  SpinSumReport report;
  try {
    for (const auto& p : probes) report.sums.push_back(spin_sum(family(p).particles, delta(p)));
  } catch (const std::exception& e) {
    report.verdict = CovarianceVerdict::Error;
    report.error = e.what();
    report.sums.clear();
    return report;
  }

  const Eigen::Index rows = 16 * static_cast<Eigen::Index>(probes.size());
  Eigen::MatrixXcd a(rows, 4);
  Eigen::VectorXcd b(rows);
  const Matrix4 g5 = gamma5();
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Matrix4 sl = slash(probes[k]);
    const std::array<Matrix4, 4> cols{Matrix4::Identity(), g5, sl, Matrix4(g5 * sl)};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Eigen::Index r = 16 * static_cast<Eigen::Index>(k) + 4 * i + j;
        for (int c = 0; c < 4; ++c) a(r, c) = cols[c](i, j);
        b(r) = report.sums[k](i, j);
      }
    }
  }
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  report.fit = {x(0), x(1), x(2), x(3)};
  const double norm_b = b.norm();
  report.residual = norm_b > 0.0 ? (a * x - b).norm() / norm_b : 0.0;

  const double coeff_scale = std::max(x.cwiseAbs().maxCoeff(), 1e-300);
  if (report.residual > fit_tol) {
    report.verdict = CovarianceVerdict::NonCovariant;
  } else if (std::abs(x(1)) > fit_tol * coeff_scale || std::abs(x(3)) > fit_tol * coeff_scale) {
    report.verdict = CovarianceVerdict::CovariantStar;
  } else {
    report.verdict = CovarianceVerdict::Covariant;
  }
  return report;
}

StarForm star_form(const SpinSumReport& report, FamilyKind kind, double mass, double tol) {
  const auto& f = report.fit;
  const double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d), 1e-300});
  auto zero = [&](const Complex& z) { return std::abs(z) <= tol * scale; };
  StarForm out;
  auto clean = [&](const Complex& z) {
    return Complex(std::abs(z.real()) <= tol * scale ? 0.0 : z.real(), std::abs(z.imag()) <= tol * scale ? 0.0 : z.imag());
  };
  std::ostringstream text;
  const std::array<std::pair<Complex, const char*>, 4> terms{
      {{f.a, "1"}, {f.b, "g5"}, {f.c, "gamma.p"}, {f.d, "g5*gamma.p"}}};
  for (const auto& [c, name] : terms) {
    if (zero(c)) continue;
    if (text.tellp() > 0) text << " + ";
    text << complex_text(clean(c)) << "*" << name;
  }
  out.measured = text.tellp() > 0 ? text.str() : "0";
  if (report.verdict != CovarianceVerdict::CovariantStar) return out;
  if (kind == FamilyKind::SingularDegenerate) {
    out.matches = zero(f.a) && zero(f.c) && zero(f.d) && !zero(f.b);
  } else {
    const bool plus = std::abs(f.b - mass * f.c) <= tol * scale;
    const bool minus = std::abs(f.b + mass * f.c) <= tol * scale;
    out.matches = zero(f.a) && zero(f.d) && !zero(f.c) && (plus || minus);
  }
  return out;
}

std::string TableV::symbol(CovarianceVerdict v) {
  switch (v) {
    case CovarianceVerdict::Covariant:
      return "✓";
    case CovarianceVerdict::CovariantStar:
      return "✓*";
    case CovarianceVerdict::NonCovariant:
      return "✗";
    case CovarianceVerdict::Error:
      return "Error";
  }
  return "?";
}

std::string TableV::markdown() const {
  std::ostringstream out;
  out << "| Delta | Regular spinors | Singular spinors | Singular spinors (with degeneracy beyond spin) |\n";
  out << "|---|---|---|---|\n";
  for (Discrete d : kAllDiscrete) {
    out << "| " << to_string(d) << " |";
    for (const auto& cell : cells[index_of(d)]) out << ' ' << symbol(cell.verdict) << " |";
    out << '\n';
  }
  return out.str();
}

std::string TableV::csv() const {
  std::ostringstream out;
  out << "delta,regular,singular,degenerate\n";
  for (Discrete d : kAllDiscrete) {
    out << to_string(d);
    for (const auto& cell : cells[index_of(d)]) out << ',' << symbol(cell.verdict);
    out << '\n';
  }
  return out.str();
}

TableV table_v(const TableVOptions& options) {
  TableV t;
  const std::array<FamilyKind, 3> kinds{FamilyKind::Regular, FamilyKind::Singular, FamilyKind::SingularDegenerate};
  for (Discrete d : kAllDiscrete) {
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      t.cells[index_of(d)][k] = covariance_analysis(family_builder(kinds[k], options.octet, options.policy),
                                                    dual_builder(d), options.probes, options.fit_tol);
    }
  }
  return t;
}

const std::array<std::array<std::string, 3>, 8>& reference_table_v() {
  static const std::array<std::array<std::string, 3>, 8> table{{
      {"✓", "✗", "✓"},
      {"✓", "✓", "✓"},
      {"✗", "✗", "✓"},
      {"✗", "✗", "✓"},
      {"✗", "✗", "✓"},
      {"✓*", "✗", "✓"},
      {"✗", "✗", "✓*"},
      {"✓*", "✗", "✓*"},
  }};
  return table;
}

Matrix4 reference_ct_regular_spin_sum(const Momentum& p) {
  return kI * (p.mass() * gamma5() - slash(p));
}

Matrix4 reference_ct_regular_core(const Momentum& p) {
  const Complex ie = kI * p.energy();
  Matrix4 m = Matrix4::Zero();
  m(0, 2) = -ie;
  m(1, 3) = -ie;
  m(2, 0) = ie;
  m(3, 1) = ie;
  return m;
}

Matrix4 reference_ct_singular_spin_sum(const Momentum& p) {
  const double m = p.mass();
  const double e = p.energy();
  const double px = p.px();
  const double py = p.py();
  const double pz = p.pz();
  const double d = m + e;
  const double p2 = px * px + py * py + pz * pz;
  const Complex i = kI;
  Matrix4 r;
  r(0, 0) = -px / 2.0 - i * py * pz / (2.0 * d);
  r(0, 1) = (m - i * px - py + pz + e) * (m + i * px + py + pz + e) / (4.0 * d);
  r(0, 2) = -i * (m * m + m * (pz + e) + px * px + py * py + pz * (pz + e)) / (2.0 * d);
  r(0, 3) = -0.5 * i * (px - i * py);
  r(1, 0) = -(m + i * px - py - pz + e) * (m - i * px + py - pz + e) / (4.0 * d);
  r(1, 1) = 0.5 * (px + i * py * pz / d);
  r(1, 2) = 0.5 * (py - i * px);
  r(1, 3) = -0.5 * i * (p2 / d + m - pz);
  r(2, 0) = 0.5 * i * (p2 / d + m - pz);
  r(2, 1) = -0.5 * i * (px - i * py);
  r(2, 2) = -px / 2.0 + i * py * pz / (2.0 * d);
  r(2, 3) = -(m - i * px - py - pz + e) * (m + i * px + py - pz + e) / (4.0 * d);
  r(3, 0) = 0.5 * (py - i * px);
  r(3, 1) = i * (m * m + m * (pz + e) + px * px + py * py + pz * (pz + e)) / (2.0 * d);
  r(3, 2) = 0.5 * ((px * px + i * px * py + pz * pz) / d + m + pz);
  r(3, 3) = 0.5 * (px - i * py * pz / d);
  return r;
}

Matrix4 reference_ct_singular_core(const Momentum& p) {
  const double e = p.energy();
  const double px = p.px();
  const double pz = p.pz();
  const Complex i = kI;
  Matrix4 r;
  r << -px, pz, -i * e, 0.0,
       pz, px, 0.0, -i * e,
       i * e, 0.0, -px, pz,
       0.0, i * e, pz, px;
  return r;
}

Matrix4 reference_octet_core(const Momentum& p) { return -kI * slash(p); }

Matrix4 reference_t_singular_spin_sum(const Momentum& p) {
  const double m = p.mass();
  const double e = p.energy();
  const double px = p.px();
  const double py = p.py();
  const double pz = p.pz();
  const double d = m + e;
  const Complex i = kI;
  Matrix4 r;
  r(0, 0) = px + i * py * pz / d;
  r(0, 1) = (-m * m - m * pz - m * e - px * px + i * px * py - pz * pz - pz * e) / d;
  r(0, 2) = -i * py * (m + pz + e) / d;
  r(0, 3) = -m - py * (py + i * px) / d;
  r(1, 0) = (px * px + i * px * py + pz * pz) / d + m - pz;
  r(1, 1) = -px - i * py * pz / d;
  r(1, 2) = m + py * (py - i * px) / d;
  r(1, 3) = -i * py * (m - pz + e) / d;
  r(2, 0) = i * py * (m - pz + e) / d;
  r(2, 1) = -m - py * (py + i * px) / d;
  r(2, 2) = -px + i * py * pz / d;
  r(2, 3) = (-px * px + i * px * py - pz * pz) / d - m + pz;
  r(3, 0) = m + py * (py - i * px) / d;
  r(3, 1) = i * py * (m + pz + e) / d;
  r(3, 2) = (px * px + i * px * py + pz * pz) / d + m + pz;
  r(3, 3) = px - i * py * pz / d;
  return r;
}

Realizability spin_sum_realizability(const Matrix4& target, const SymOperator& delta, int members, double tol) {
  Realizability r;
  const Matrix4 right = delta.matrix.adjoint() * gamma(0);
  const Matrix4 n = target * right.inverse();
  const double scale = std::max(n.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::JacobiSVD<Matrix4> svd(n);
  r.rank = 0;
  for (int k = 0; k < 4; ++k) {
    if (svd.singularValues()(k) > tol * scale) ++r.rank;
  }
  if (delta.antilinear) {
    r.symmetry_defect = (n - n.transpose()).cwiseAbs().maxCoeff() / scale;
    r.min_eigenvalue = 0.0;
    r.realizable = r.symmetry_defect <= tol && r.rank <= members;
  } else {
    r.symmetry_defect = (n - n.adjoint()).cwiseAbs().maxCoeff() / scale;
    const Matrix4 h = 0.5 * (n + n.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> eig(h);
    r.min_eigenvalue = eig.eigenvalues().minCoeff() / scale;
    r.realizable = r.symmetry_defect <= tol && r.min_eigenvalue >= -tol && r.rank <= members;
  }
  return r;
}

double relative_difference(const Matrix4& a, const Matrix4& b) {
  const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace lounesto
