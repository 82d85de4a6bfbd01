#include <doctest.h>

#include "lounesto/spinsum.hpp"
#include "support.hpp"

using namespace lounesto;
using namespace lounesto::testing;

namespace {

const std::vector<Momentum> kProbes = probe_momenta(5, 42);

}  // namespace

TEST_CASE("Dirac spin sums are covariant with the textbook coefficients") {
  const SpinSumReport r = covariance_analysis(family_builder(FamilyKind::Regular), dual_builder(Discrete::Identity),
                                              kProbes);
  CHECK(r.verdict == CovarianceVerdict::Covariant);
  CHECK(std::abs(r.fit.a - 1.0) < 1e-10);
  CHECK(std::abs(r.fit.c - 1.0) < 1e-10);
  CHECK(std::abs(r.fit.b) < 1e-10);
  CHECK(std::abs(r.fit.d) < 1e-10);
}

TEST_CASE("Dirac propagator core is gamma.p + m on shell") {
  const Momentum p = Momentum::on_shell(0.3, 0.2, -0.5, 1.0);
  const PropagatorCore core = propagator_core(p, family_builder(FamilyKind::Regular),
                                              dual_builder(Discrete::Identity));
  CHECK(max_abs(core.S_of_p - (slash(p) + Matrix4::Identity())) < 1e-12);
}

TEST_CASE("strict policy turns an uncertified octet into an Error verdict") {
  const SpinSumReport r = covariance_analysis(family_builder(FamilyKind::SingularDegenerate),
                                              dual_builder(Discrete::CT), kProbes);
  if (!pinned_octet_phases().found) {
    CHECK(r.verdict == CovarianceVerdict::Error);
    CHECK_FALSE(r.error.empty());
  }
}

TEST_CASE("non-covariant sums are detected") {
  const SpinSumReport r = covariance_analysis(family_builder(FamilyKind::Regular), dual_builder(Discrete::C),
                                              kProbes);
  CHECK(r.verdict == CovarianceVerdict::NonCovariant);
  CHECK(r.residual > 1e-3);
}

TEST_CASE("realizability certificate") {
  const Momentum p = Momentum::on_shell(0.5, 0.1, 0.2, 1.0);
  const Realizability ok = spin_sum_realizability(slash(p) + Matrix4::Identity(), identity_operator(), 2);
  CHECK(ok.realizable);
  CHECK(ok.rank == 2);
  const Realizability too_many = spin_sum_realizability(slash(p) + Matrix4::Identity(), identity_operator(), 1);
  CHECK_FALSE(too_many.realizable);
  const Realizability wrong_sign = spin_sum_realizability(-(slash(p) + Matrix4::Identity()), identity_operator(), 2);
  CHECK_FALSE(wrong_sign.realizable);
}

TEST_CASE("measured spin sums are always realizable by their own members") {
  const Momentum p = Momentum::on_shell(0.5, 0.1, 0.2, 1.0);
  for (Discrete d : kAllDiscrete) {
    for (FamilyKind k : {FamilyKind::Regular, FamilyKind::Singular}) {
      const SpinorFamily f = family_builder(k)(p);
      const SymOperator delta = discrete_operator(d, p);
      const Realizability r = spin_sum_realizability(spin_sum(f.particles, delta), delta, 2);
      CHECK_MESSAGE(r.realizable, to_string(d) << " " << to_string(k));
    }
  }
}

TEST_CASE("table V symbols and rendering") {
  CHECK(TableV::symbol(CovarianceVerdict::Covariant) == "✓");
  CHECK(TableV::symbol(CovarianceVerdict::CovariantStar) == "✓*");
  CHECK(TableV::symbol(CovarianceVerdict::NonCovariant) == "✗");
  CHECK(TableV::symbol(CovarianceVerdict::Error) == "Error");
  TableVOptions opts;
  opts.probes = kProbes;
  const TableV t = table_v(opts);
  CHECK(t.cells[0][0].verdict == CovarianceVerdict::Covariant);
  CHECK(t.markdown().find("| CPT |") != std::string::npos);
  CHECK(t.csv().rfind("delta,", 0) == 0);
}

TEST_CASE("relative_difference is scale free") {
  const Matrix4 a = random_matrix(1);
  CHECK(relative_difference(a, a) == 0.0);
  CHECK(std::abs(relative_difference(1.01 * a, a) - 0.01) < 1e-12);
  CHECK(std::abs(relative_difference(1.01e6 * a, 1e6 * a) - 0.01) < 1e-12);
}
