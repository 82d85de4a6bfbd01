#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lounesto/kinematics.hpp"
#include "lounesto/types.hpp"

namespace lounesto {

enum class Helicity { Plus, Minus };
enum class ElkoType { Self, Anti };

enum class SpinorKind { RegularParticle, RegularAntiparticle, SingularSelf, SingularAnti, Octet, Random };

std::string to_string(SpinorKind k);

struct Spinor {
  Vector4c components = Vector4c::Zero();
  SpinorKind kind = SpinorKind::Random;
  /// Degeneracy label: "+", "-", or an octet tag such as "S+".
  std::string h;
};

/// Helicity eigenspinors of sigma.n for unit n (polar angle from +z, azimuth from +x).
/// At rest the z axis is used. Throws std::invalid_argument within 1e-12 of -z.
std::array<Vector2c, 2> helicity_basis(const Momentum& p);

/// boost(p) sqrt(m) (xi, xi); u-bar u = 2m and sum u u-bar = gamma.p + m.
Spinor dirac_u(const Momentum& p, Helicity h);

/// boost(p) sqrt(m) (xi, -xi); sum v v-bar = gamma.p - m.
Spinor dirac_v(const Momentum& p, Helicity h);

/// boost(p) sqrt(m) [s i Theta conj(phi); phi], Theta = [[0,-1],[1,0]], s = +1 (Self) or -1 (Anti).
Spinor elko(const Momentum& p, ElkoType type, Helicity h);

/// Four i.i.d. complex-Gaussian components, redrawn while |psi| < 1e-6. Unnormalized.
Spinor random_spinor(std::uint64_t seed);

enum class FamilyKind { Regular, Singular, SingularDegenerate };

std::string to_string(FamilyKind k);

struct SpinorFamily {
  FamilyKind kind = FamilyKind::Regular;
  Momentum momentum = Momentum::rest(1.0);
  std::vector<Spinor> particles;
  std::vector<Spinor> antiparticles;

  std::vector<Spinor> members() const;
};

/// u(+), u(-) | v(+), v(-).
SpinorFamily regular_family(const Momentum& p);

/// Self(+), Self(-) | Anti(+), Anti(-).
SpinorFamily singular_family(const Momentum& p);

/// Relative phases c_k applied to (Self+, Self-, Anti+, Anti-) / sqrt(2).
struct OctetPhases {
  std::array<Complex, 4> particle{};
  std::array<Complex, 4> antiparticle{};
  /// Worst relative residual of the particle spin sum against -i gamma.p (Delta = CT).
  double residual = 0.0;
  bool found = false;
};

/// Exhaustive search over {+1, -1, +i, -i}^4, lowest index wins ties. `found` iff
/// residual <= tol at every probe. Antiparticle phases are the particle phases times i.
OctetPhases search_octet_phases(const std::vector<Momentum>& probes, double tol = Tolerances{}.fpk);

/// The search outcome on the default probes, pinned (mirrors data/octet_fixture.json).
const OctetPhases& pinned_octet_phases();

enum class OctetPolicy {
  /// Refuse to build an octet the search did not certify (throws NotFound).
  Strict,
  /// Build from the best phases anyway.
  BestEffort,
};

SpinorFamily elko_degenerate_octet(const Momentum& p, const OctetPhases& phases = pinned_octet_phases(),
                                   OctetPolicy policy = OctetPolicy::Strict);

/// Seeded on-shell momenta with |p| uniform in [lo*m, hi*m], isotropic directions kept
/// away from the -z helicity singularity.
std::vector<Momentum> probe_momenta(std::size_t count, std::uint64_t seed, double mass = 1.0, double lo = 0.1,
                                    double hi = 3.0);

}  // namespace lounesto
