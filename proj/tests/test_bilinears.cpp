#include <doctest.h>

#include "lounesto/bilinears.hpp"
#include "lounesto/spinors.hpp"
#include "support.hpp"

using namespace lounesto;
using namespace lounesto::testing;

TEST_CASE("Dirac u has sigma = 2m and J_mu = 2 p_mu") {
  const Momentum p = Momentum::on_shell(0.4, -0.3, 1.1, 1.5);
  const BilinearSet b = bilinears(dirac_u(p, Helicity::Plus).components, identity_operator());
  CHECK(std::abs(b.sigma - 3.0) < 1e-12);
  CHECK(std::abs(b.omega) < 1e-12);
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(b.J[mu] - 2.0 * kMetric[mu] * p.components()[mu]) < 1e-12);
}

TEST_CASE("S is antisymmetric") {
  const BilinearSet b = bilinears(random_spinor(4).components, identity_operator());
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(std::abs(b.s(mu, mu)) == 0.0);
    for (int nu = 0; nu < 4; ++nu) CHECK(std::abs(b.s(mu, nu) + b.s(nu, mu)) < 1e-15);
  }
}

TEST_CASE("FPK identities hold for random spinors and duals") {
  const std::vector<SymOperator> duals{identity_operator(), linear_operator(gamma5(), "g5"), charge_conjugation(),
                                       time_reversal(), linear_operator(gamma(0) * gamma(2), "g02")};
  for (const auto& d : duals) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      const FpkReport r = fpk_check(bilinears(random_spinor(derive_seed(1, 2, s)).components, d));
      CHECK_MESSAGE(r.all_pass(), d.label << " seed " << s << " worst " << r.worst());
    }
  }
}

TEST_CASE("Fierz aggregate equals 4 psi zeta and is a boomerang") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Vector4c psi = random_spinor(derive_seed(2, 2, s)).components;
    const SymOperator d = s % 2 ? charge_conjugation() : identity_operator();
    const FierzAggregate z = fierz_aggregate(bilinears(psi, d));
    CHECK(max_abs(z.Z - 4.0 * psi * dual(psi, d)) < 1e-10 * max_abs(z.Z));
    CHECK(boomerang_check(z));
    CHECK(aggregate_identities_check(z).all_pass());
    CHECK(trace_identities_check(z, 1e-12).all_pass());
  }
}

TEST_CASE("FPK check flags an inconsistent bilinear set") {
  BilinearSet b;
  b.sigma = 1.0;
  b.J = {0.0, 0.0, 0.0, 0.0};
  const FpkReport r = fpk_check(b);
  CHECK_FALSE(r.all_pass());
  CHECK(r.worst() > 0.1);
}

TEST_CASE("minkowski_dot uses the mostly-minus metric") {
  CHECK(minkowski_dot({1.0, 1.0, 0.0, 0.0}, {1.0, 1.0, 0.0, 0.0}) == Complex(0.0, 0.0));
  CHECK(minkowski_dot({2.0, 0.0, 0.0, 0.0}, {3.0, 5.0, 0.0, 0.0}) == Complex(6.0, 0.0));
}
