#include <doctest.h>

#include "lounesto/classifier.hpp"
#include "lounesto/spinors.hpp"
#include "support.hpp"

using namespace lounesto;
using namespace lounesto::testing;

TEST_CASE("lookup covers both tables") {
  for (const auto& r : kAllowedClasses) {
    const LounestoLabel l = lookup(r.nonzero);
    CHECK(l.verdict == Verdict::Allowed);
    CHECK(l.name() == r.name);
  }
  for (const auto& r : kForbiddenClasses) {
    const LounestoLabel l = lookup(r.nonzero);
    CHECK(l.verdict == Verdict::Forbidden);
    CHECK(l.name() == r.name);
  }
  CHECK(lookup(Pattern{}).verdict == Verdict::Unclassifiable);
}

TEST_CASE("labels parse back") {
  for (const auto& r : kAllowedClasses) CHECK(parse_label(r.name)->name() == r.name);
  for (const auto& r : kForbiddenClasses) CHECK(parse_label(r.name)->name() == r.name);
  CHECK_FALSE(parse_label("8").has_value());
  CHECK_FALSE(parse_label("1.9").has_value());
}

TEST_CASE("standard spinors land in their textbook classes") {
  const Momentum p = Momentum::on_shell(0.2, 0.3, 0.4, 1.0);
  CHECK(classify(bilinears(dirac_u(p, Helicity::Plus).components, identity_operator())).name() == "2");
  CHECK(classify(bilinears(elko(p, ElkoType::Self, Helicity::Plus).components, identity_operator())).name() == "5");
  Vector4c chiral = Vector4c::Zero();
  chiral(0) = 1.0;
  CHECK(classify(bilinears(chiral, identity_operator())).name() == "6");
  CHECK(classify(bilinears(random_spinor(3).components, identity_operator())).name() == "1");
  CHECK(classify(BilinearSet{}).verdict == Verdict::Unclassifiable);
}

TEST_CASE("vanishing pattern margin reflects the gap to the threshold") {
  Vector4c chiral = Vector4c::Zero();
  chiral(0) = 1.0;
  const VanishingPattern vp = vanishing_pattern(bilinears(chiral, identity_operator()));
  CHECK(vp.scale > 0.0);
  CHECK(vp.margin > 5.0);
  CHECK_FALSE(vp.nonzero[0]);
  CHECK(vp.nonzero[2]);
}

TEST_CASE("constraint checks on chosen witnesses") {
  Vector4c chiral = Vector4c::Zero();
  chiral(0) = 1.0;
  const BilinearSet b = bilinears(chiral, identity_operator());
  const ConstraintCheck c = verify_constraints(classify(b), b);
  REQUIRE(c.find("J_mu K_nu = J_nu K_mu") != nullptr);
  CHECK(c.all_pass());
  CHECK(rank_one_residual(b) < 1e-12);
}

TEST_CASE("witness search finds a 1.6 spinor whose constraints pass") {
  WitnessOptions opts;
  opts.seed = 42;
  const Witness w = find_witness(*parse_label("1.6"), admissible_duals(), opts);
  CHECK(w.label.name() == "1.6");
  CHECK(w.constraints.all_pass());
  CHECK(sigma_omega_residual(w.bilinears) < 1e-8);
  CHECK(w.dual.admissible);
}

TEST_CASE("witness search argument checks") {
  WitnessOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS(find_witness(*parse_label("2.2*"), admissible_duals(), opts), std::invalid_argument);
  CHECK_THROWS_AS(find_witness(*parse_label("1.6"), {}, opts), std::invalid_argument);
  opts.use_pools = false;
  CHECK_THROWS_AS(find_witness(*parse_label("1.1"), {make_dual(identity_operator())}, opts), NotFound);
}

TEST_CASE("admissible duals are distinct and admissible") {
  const auto duals = admissible_duals();
  CHECK(duals.size() > 10);
  for (std::size_t i = 0; i < duals.size(); ++i) {
    CHECK(duals[i].admissible);
    for (std::size_t j = i + 1; j < duals.size(); ++j) CHECK_FALSE(same_operator(duals[i].op, duals[j].op, 1e-10));
  }
}

TEST_CASE("census is seeded and never yields forbidden classes") {
  const auto duals = admissible_duals();
  const auto a = census(duals, 200, 5);
  const auto b = census(duals, 200, 5);
  REQUIRE(a.size() == duals.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].counts == b[k].counts);
    for (const auto& [label, n] : a[k].counts) CHECK(label.find('*') == std::string::npos);
  }
  CHECK_THROWS_AS(census(duals, 0, 5), std::invalid_argument);
}

TEST_CASE("class tables render") {
  const std::string md = tables_markdown();
  CHECK(md.find("| 1.6 |") != std::string::npos);
  CHECK(md.find("| 3.7* |") != std::string::npos);
}
