#include "lounesto/spinors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lounesto/clifford.hpp"
#include "lounesto/duals.hpp"
#include "lounesto/random.hpp"
#include "lounesto/symmetry.hpp"

namespace lounesto {
namespace {

constexpr std::uint64_t kProbeStream = 0x70726f6265ULL;

Vector4c stack(const Vector2c& top, const Vector2c& bottom) {
  Vector4c v;
  v << top, bottom;
  return v;
}

const Vector2c& pick(const std::array<Vector2c, 2>& basis, Helicity h) {
  return basis[h == Helicity::Plus ? 0 : 1];
}

std::string tag(Helicity h) { return h == Helicity::Plus ? "+" : "-"; }

Matrix4 spin_sum_ct(const std::vector<Vector4c>& members, const Momentum& p) {
  const SymOperator ct = discrete_operator(Discrete::CT, p);
  Matrix4 sum = Matrix4::Zero();
  for (const auto& psi : members) sum += psi * dual(psi, ct);
  return sum;
}

const std::array<Complex, 4> kPhaseAlphabet{Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};

}  // namespace

std::string to_string(SpinorKind k) {
  switch (k) {
    case SpinorKind::RegularParticle:
      return "regular-particle";
    case SpinorKind::RegularAntiparticle:
      return "regular-antiparticle";
    case SpinorKind::SingularSelf:
      return "singular-self";
    case SpinorKind::SingularAnti:
      return "singular-anti";
    case SpinorKind::Octet:
      return "octet";
    case SpinorKind::Random:
      return "random";
  }
  return "?";
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Regular:
      return "regular";
    case FamilyKind::Singular:
      return "singular";
    case FamilyKind::SingularDegenerate:
      return "degenerate";
  }
  return "?";
}

std::array<Vector2c, 2> helicity_basis(const Momentum& p) {
  const double n = p.spatial_norm();
  double theta = 0.0;
  double phi = 0.0;
  if (n > 0.0) {
    const double cz = std::clamp(p.pz() / n, -1.0, 1.0);
    if (cz < -1.0 + 1e-12) {
      throw std::invalid_argument("helicity basis undefined for momentum along -z");
    }
    theta = std::acos(cz);
    phi = std::atan2(p.py(), p.px());
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Vector2c plus;
  plus << c, std::polar(s, phi);
  Vector2c minus;
  minus << -std::polar(s, -phi), c;
  return {plus, minus};
}

Spinor dirac_u(const Momentum& p, Helicity h) {
  const Vector2c& xi = pick(helicity_basis(p), h);
  return {boost(p) * (std::sqrt(p.mass()) * stack(xi, xi)), SpinorKind::RegularParticle, tag(h)};
}

Spinor dirac_v(const Momentum& p, Helicity h) {
  const Vector2c& xi = pick(helicity_basis(p), h);
  return {boost(p) * (std::sqrt(p.mass()) * stack(xi, -xi)), SpinorKind::RegularAntiparticle, tag(h)};
}

Spinor elko(const Momentum& p, ElkoType type, Helicity h) {
  const Vector2c& phi = pick(helicity_basis(p), h);
  Matrix2 theta;
  theta << 0.0, -1.0, 1.0, 0.0;
  const double s = type == ElkoType::Self ? 1.0 : -1.0;
  const Vector2c top = s * kI * (theta * phi.conjugate());
  const SpinorKind kind = type == ElkoType::Self ? SpinorKind::SingularSelf : SpinorKind::SingularAnti;
  return {boost(p) * (std::sqrt(p.mass()) * stack(top, phi)), kind, (type == ElkoType::Self ? "S" : "A") + tag(h)};
}

Spinor random_spinor(std::uint64_t seed) {
  Engine rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector4c v;
  do {
    for (int i = 0; i < 4; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      v(i) = Complex(re, im);
    }
  } while (v.norm() < 1e-6);
  return {v, SpinorKind::Random, ""};
}

std::vector<Spinor> SpinorFamily::members() const {
  std::vector<Spinor> all = particles;
  all.insert(all.end(), antiparticles.begin(), antiparticles.end());
  return all;
}

SpinorFamily regular_family(const Momentum& p) {
  SpinorFamily f;
  f.kind = FamilyKind::Regular;
  f.momentum = p;
  for (Helicity h : {Helicity::Plus, Helicity::Minus}) {
    f.particles.push_back(dirac_u(p, h));
    f.antiparticles.push_back(dirac_v(p, h));
  }
  return f;
}

SpinorFamily singular_family(const Momentum& p) {
  SpinorFamily f;
  f.kind = FamilyKind::Singular;
  f.momentum = p;
  for (Helicity h : {Helicity::Plus, Helicity::Minus}) {
    f.particles.push_back(elko(p, ElkoType::Self, h));
    f.antiparticles.push_back(elko(p, ElkoType::Anti, h));
  }
  return f;
}

namespace {

std::array<Vector4c, 4> octet_base(const Momentum& p) {
  const double r = 1.0 / std::sqrt(2.0);
  return {r * elko(p, ElkoType::Self, Helicity::Plus).components, r * elko(p, ElkoType::Self, Helicity::Minus).components,
          r * elko(p, ElkoType::Anti, Helicity::Plus).components, r * elko(p, ElkoType::Anti, Helicity::Minus).components};
}

const std::array<const char*, 4> kOctetTags{"S+", "S-", "A+", "A-"};

}  // namespace

OctetPhases search_octet_phases(const std::vector<Momentum>& probes, double tol) {
  if (probes.empty()) throw std::invalid_argument("octet search needs at least one probe momentum");
  std::vector<std::array<Vector4c, 4>> bases;
  std::vector<Matrix4> targets;
  for (const auto& p : probes) {
    bases.push_back(octet_base(p));
    targets.push_back(-kI * slash(p));
  }

  OctetPhases best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int code = 0; code < 256; ++code) {
    std::array<Complex, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = kPhaseAlphabet[(code >> (2 * k)) & 3];
    double worst = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      std::vector<Vector4c> members;
      for (int k = 0; k < 4; ++k) members.push_back(c[k] * bases[i][k]);
      const Matrix4 sum = spin_sum_ct(members, probes[i]);
      worst = std::max(worst, (sum - targets[i]).norm() / targets[i].norm());
    }
    if (worst < best.residual) {
      best.residual = worst;
      best.particle = c;
    }
  }
  for (int k = 0; k < 4; ++k) best.antiparticle[k] = kI * best.particle[k];
  best.found = best.residual <= tol;
  return best;
}

const OctetPhases& pinned_octet_phases() {
  // Regenerate with `lounesto-cli octet-search`; must agree with data/octet_fixture.json.
  static const OctetPhases pinned = [] {
    OctetPhases o;
    o.particle = {Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0)};
    for (int k = 0; k < 4; ++k) o.antiparticle[k] = kI * o.particle[k];
    o.residual = 1.4142135623730951;
    o.found = false;
    return o;
  }();
  return pinned;
}

SpinorFamily elko_degenerate_octet(const Momentum& p, const OctetPhases& phases, OctetPolicy policy) {
  if (policy == OctetPolicy::Strict && !phases.found) {
    throw NotFound("no octet phase assignment reproduces -i gamma.p with the CT dual (best relative residual " +
                   std::to_string(phases.residual) + ")");
  }
  const auto base = octet_base(p);
  SpinorFamily f;
  f.kind = FamilyKind::SingularDegenerate;
  f.momentum = p;
  for (int k = 0; k < 4; ++k) {
    f.particles.push_back({phases.particle[k] * base[k], SpinorKind::Octet, std::string("p") + kOctetTags[k]});
    f.antiparticles.push_back({phases.antiparticle[k] * base[k], SpinorKind::Octet, std::string("a") + kOctetTags[k]});
  }
  return f;
}

std::vector<Momentum> probe_momenta(std::size_t count, std::uint64_t seed, double mass, double lo, double hi) {
  std::vector<Momentum> out;
  std::uint64_t index = 0;
  while (out.size() < count) {
    Engine rng(derive_seed(seed, kProbeStream, index++));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(lo, hi);
    Eigen::Vector3d dir(normal(rng), normal(rng), normal(rng));
    if (dir.norm() < 1e-6) continue;
    dir.normalize();
    if (dir.z() < -0.95) continue;
    const double mag = uniform(rng) * mass;
    out.push_back(Momentum::on_shell(mag * dir.x(), mag * dir.y(), mag * dir.z(), mass));
  }
  return out;
}

}  // namespace lounesto
