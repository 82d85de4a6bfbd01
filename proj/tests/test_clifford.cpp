#include <doctest.h>

#include "lounesto/clifford.hpp"
#include "support.hpp"

using namespace lounesto;
using namespace lounesto::testing;

TEST_CASE("gamma matrices satisfy the Clifford relation") {
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const double expected = mu == nu ? 2.0 * kMetric[mu] : 0.0;
      CHECK(max_abs(anti - expected * Matrix4::Identity()) < 1e-14);
    }
    CHECK(max_abs(gamma_upper(mu) - kMetric[mu] * gamma(mu)) < 1e-15);
  }
}

TEST_CASE("gamma5 is diag(1,1,-1,-1) and anticommutes with every gamma") {
  Matrix4 expected = Matrix4::Zero();
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_abs(gamma5() - expected) < 1e-15);
  CHECK(max_abs(gamma5() + kI * gamma0123()) < 1e-15);
  for (int mu = 0; mu < 4; ++mu) CHECK(max_abs(gamma5() * gamma(mu) + gamma(mu) * gamma5()) < 1e-15);
}

TEST_CASE("Levi-Civita symbol signs") {
  CHECK(epsilon(0, 1, 2, 3) == 1);
  CHECK(epsilon(1, 0, 2, 3) == -1);
  CHECK(epsilon(0, 0, 2, 3) == 0);
  CHECK(epsilon(3, 2, 1, 0) == 1);
  CHECK(epsilon_upper(0, 1, 2, 3) == -1);
}

TEST_CASE("slash of a momentum squares to m^2") {
  const Momentum p = Momentum::on_shell(0.3, -1.2, 0.7, 1.5);
  CHECK(max_abs(slash(p) * slash(p) - 2.25 * Matrix4::Identity()) < 1e-12);
}

TEST_CASE("basis elements are trace-orthonormal under the inverse pairing") {
  const auto& idx = clifford_indices();
  for (std::size_t a = 0; a < 16; ++a) {
    CHECK(idx[a].ordinal() == static_cast<int>(a));
    CHECK(max_abs(basis_inverse(idx[a]) * basis_element(idx[a]) - Matrix4::Identity()) < 1e-14);
    for (std::size_t b = 0; b < 16; ++b) {
      const Complex t = (basis_inverse(idx[a]) * basis_element(idx[b])).trace() / 4.0;
      CHECK(std::abs(t - (a == b ? 1.0 : 0.0)) < 1e-14);
    }
  }
  CHECK(idx[0].name() == "1");
}

TEST_CASE("decompose and reconstruct round-trip on seeded random matrices") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Matrix4 m = random_matrix(derive_seed(7, 1, s));
    CHECK(max_abs(decompose(m).reconstruct() - m) < 1e-12);
  }
  const CliffordCoefficients c = decompose(gamma(2) * 3.0);
  CHECK(std::abs(c[CliffordIndex::vector(2)] - 3.0) < 1e-14);
  CHECK(std::abs(c[CliffordIndex::scalar()]) < 1e-14);
}

TEST_CASE("boost matches the exponential of the boost generators") {
  for (const auto& q : {std::array<double, 3>{0.0, 0.0, 0.8}, std::array<double, 3>{0.4, -1.1, 0.2}}) {
    const Momentum p = Momentum::on_shell(q[0], q[1], q[2], 1.3);
    const double norm = p.spatial_norm();
    const double rapidity = std::atanh(norm / p.energy());
    Matrix4 gen = Matrix4::Zero();
    for (int i = 1; i <= 3; ++i) gen += (rapidity * p.components()[i] / norm) * boost_generator(i);
    const Matrix4 taylor = taylor_exp(gen);
    const bool same = max_abs(boost(p) - taylor) < 1e-12;
    const bool flipped = max_abs(boost(p) - taylor_exp(-gen)) < 1e-12;
    CHECK((same || flipped));
    CHECK(max_abs(boost(p) * slash(Momentum::rest(1.3)) * boost(p).inverse() - slash(p)) < 1e-12);
  }
  CHECK(max_abs(boost(Momentum::rest(2.0)) - Matrix4::Identity()) < 1e-15);
}

TEST_CASE("eta derivation: block anti-diagonal family of real dimension 2") {
  const EtaFamily free = derive_eta(false);
  REQUIRE(free.real_dimension() == 2);
  for (const auto& m : free.basis) {
    const BlockForm f = block_form(m);
    CHECK(f.a.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(f.d.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(f.b(0, 1)) + std::abs(f.b(1, 0)) + std::abs(f.b(0, 0) - f.b(1, 1)) < 1e-12);
    CHECK(std::abs(f.c(0, 1)) + std::abs(f.c(1, 0)) + std::abs(f.c(0, 0) - f.c(1, 1)) < 1e-12);
  }
  CHECK(free.distance_to_span(gamma(0)) < 1e-12);
  CHECK(free.distance_to_span(gamma5()) > 0.5);

  const EtaFamily parity = derive_eta(true);
  REQUIRE(parity.real_dimension() == 1);
  CHECK(parity.distance_to_span(gamma(0)) < 1e-12);
}

TEST_CASE("is_finite rejects NaN") {
  Matrix4 m = Matrix4::Identity();
  CHECK(is_finite(m));
  m(1, 2) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(is_finite(m));
}
