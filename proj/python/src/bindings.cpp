#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lounesto/classifier.hpp"
#include "lounesto/clifford.hpp"
#include "lounesto/report.hpp"
#include "lounesto/spinsum.hpp"

namespace py = pybind11;
using namespace lounesto;

namespace {

py::dict bilinear_dict(const BilinearSet& b) {
  py::dict d;
  d["sigma"] = b.sigma;
  d["omega"] = b.omega;
  d["J"] = b.J;
  d["K"] = b.K;
  py::dict s;
  for (std::size_t k = 0; k < kBivectorPairs.size(); ++k) {
    s[py::str(std::to_string(kBivectorPairs[k][0]) + std::to_string(kBivectorPairs[k][1]))] = b.S[k];
  }
  d["S"] = s;
  return d;
}

Momentum momentum_or_rest(const std::optional<Momentum>& p) { return p ? *p : Momentum::rest(1.0); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bilinear covariants, generalized duals and spin sums on 4x4 complex matrices";
  m.attr("__version__") = version();

  py::class_<Momentum>(m, "Momentum")
      .def_static("on_shell", &Momentum::on_shell, py::arg("px"), py::arg("py"), py::arg("pz"), py::arg("mass"))
      .def_static("rest", &Momentum::rest, py::arg("mass"))
      .def_property_readonly("components", &Momentum::components)
      .def_property_readonly("mass", &Momentum::mass)
      .def("__repr__", [](const Momentum& p) {
        const auto& c = p.components();
        return "Momentum(" + std::to_string(c[0]) + ", " + std::to_string(c[1]) + ", " + std::to_string(c[2]) +
               ", " + std::to_string(c[3]) + ")";
      });

  m.def("gamma", &lounesto::gamma, py::arg("mu"), "Lower-index Weyl-basis gamma matrix");
  m.def("gamma5", &lounesto::gamma5);
  m.def("slash", py::overload_cast<const Momentum&>(&slash), py::arg("p"));

  m.def(
      "operator_matrix",
      [](const std::string& label, std::optional<Momentum> p) {
        const SymOperator op = parse_operator(label, momentum_or_rest(p));
        return py::make_tuple(op.matrix, op.antilinear);
      },
      py::arg("label"), py::arg("p") = py::none(), "(matrix, antilinear) for an operator label such as 'CT*g51'");

  m.def(
      "bilinears",
      [](const Vector4c& psi, const std::string& dual, std::optional<Momentum> p) {
        return bilinear_dict(bilinears(psi, parse_operator(dual, momentum_or_rest(p))));
      },
      py::arg("psi"), py::arg("dual") = "1", py::arg("p") = py::none());

  m.def(
      "classify",
      [](const Vector4c& psi, const std::string& dual, std::optional<Momentum> p, double tol) {
        return classify(bilinears(psi, parse_operator(dual, momentum_or_rest(p))), tol).name();
      },
      py::arg("psi"), py::arg("dual") = "1", py::arg("p") = py::none(), py::arg("tol") = Tolerances{}.cls);

  m.def(
      "fpk_check",
      [](const Vector4c& psi, const std::string& dual, std::optional<Momentum> p, double tol) {
        const FpkReport r = fpk_check(bilinears(psi, parse_operator(dual, momentum_or_rest(p))), tol);
        return py::make_tuple(r.all_pass(), r.worst());
      },
      py::arg("psi"), py::arg("dual") = "1", py::arg("p") = py::none(), py::arg("tol") = Tolerances{}.fpk,
      "(pass, worst relative residual)");

  m.def(
      "relation_table",
      [](std::optional<Momentum> p) {
        const RelationTable t = relation_table(momentum_or_rest(p));
        std::vector<std::vector<std::string>> out(8);
        for (int r = 0; r < 8; ++r) {
          for (int c = 0; c < 8; ++c) out[r].push_back(t.cells[r][c].text());
        }
        return out;
      },
      py::arg("p") = py::none());

  m.def(
      "admissible_duals",
      [](const std::string& convention) {
        const auto conv = parse_convention(convention);
        if (!conv) throw std::invalid_argument("convention must be dagger or transpose");
        std::vector<std::string> out;
        for (const auto& d : admissible_duals(*conv)) out.push_back(d.label);
        return out;
      },
      py::arg("convention") = "dagger");

  m.def(
      "spin_sum",
      [](const std::string& family, const std::string& dual, const Momentum& p) {
        FamilyKind kind;
        if (family == "regular") {
          kind = FamilyKind::Regular;
        } else if (family == "singular") {
          kind = FamilyKind::Singular;
        } else {
          throw std::invalid_argument("family must be regular or singular");
        }
        const auto d = parse_discrete(dual);
        if (!d) throw std::invalid_argument("dual must be one of 1,P,C,T,CP,CT,PT,CPT");
        return spin_sum(family_builder(kind)(p).particles, discrete_operator(*d, p));
      },
      py::arg("family"), py::arg("dual"), py::arg("p"));

  m.def(
      "table_v",
      [](std::uint64_t seed, std::size_t probes) {
        TableVOptions opts;
        opts.probes = probe_momenta(probes, seed);
        const TableV t = table_v(opts);
        std::vector<std::vector<std::string>> out(8);
        for (int r = 0; r < 8; ++r) {
          for (int k = 0; k < 3; ++k) out[r].push_back(TableV::symbol(t.cells[r][k].verdict));
        }
        return out;
      },
      py::arg("seed") = 42, py::arg("probes") = 5, "Verdict symbols, rows 1..CPT, columns regular/singular/degenerate");

  m.def(
      "derive_eta",
      [](bool parity) { return derive_eta(parity).basis; }, py::arg("parity") = false,
      "Real basis of the solution space of {K_i, eta} = 0");

  py::register_exception<NotFound>(m, "NotFound", PyExc_LookupError);
}
