#include "lounesto/duals.hpp"

#include <cctype>
#include <sstream>

#include "lounesto/bilinears.hpp"
#include "lounesto/clifford.hpp"
#include "lounesto/random.hpp"
#include "lounesto/spinors.hpp"

namespace lounesto {
namespace {

constexpr std::uint64_t kFpkStream = 0x66706bULL;
constexpr std::uint64_t kSingularStream = 0x73696e67ULL;

double hermitian_defect(const Matrix2& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

struct GammaChoice {
  std::string entry;
  std::string digits;
};

std::vector<GammaChoice> gamma_column(int col) {
  switch (col) {
    case 8:
      return {{"g0", "0"}};
    case 9:
      return {{"g1", "1"}, {"g2", "2"}, {"g3", "3"}};
    case 10:
      return {{"g5", "5"}};
    case 11:
      return {{"g01", "01"}, {"g02", "02"}, {"g03", "03"}};
    case 12:
      return {{"g12", "12"}, {"g13", "13"}, {"g23", "23"}};
    case 13:
      return {{"g51", "51"}, {"g52", "52"}, {"g53", "53"}};
    default:
      return {};
  }
}

std::string join(const std::set<std::string>& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const auto& e : s) out += (out.empty() ? "" : ", ") + e;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string to_string(AntilinearConvention c) { return c == AntilinearConvention::Dagger ? "dagger" : "transpose"; }

std::optional<AntilinearConvention> parse_convention(const std::string& text) {
  if (text == "dagger") return AntilinearConvention::Dagger;
  if (text == "transpose") return AntilinearConvention::Transpose;
  return std::nullopt;
}

BlockForm block_form(const Matrix4& m) {
  BlockForm f;
  f.a = m.topLeftCorner<2, 2>();
  f.b = m.topRightCorner<2, 2>();
  f.c = m.bottomLeftCorner<2, 2>();
  f.d = m.bottomRightCorner<2, 2>();
  f.b_hermitian_defect = hermitian_defect(f.b);
  f.c_hermitian_defect = hermitian_defect(f.c);
  f.d_defect = (f.d - f.a.adjoint()).cwiseAbs().maxCoeff();
  return f;
}

ConstraintReport constraint_check(const SymOperator& delta, AntilinearConvention convention, double tol) {
  const Matrix4 g0 = gamma(0);
  const Matrix4& m = delta.matrix;
  const Matrix4 image = (delta.antilinear && convention == AntilinearConvention::Transpose)
                            ? Matrix4(g0 * m.transpose() * g0)
                            : Matrix4(g0 * m.adjoint() * g0);
  ConstraintReport r;
  r.residual = (image - m).cwiseAbs().maxCoeff();
  r.pass = r.residual <= tol;
  if (r.pass) r.blocks = block_form(m);
  return r;
}

DualOperator make_dual(const SymOperator& op, AntilinearConvention convention, double tol) {
  return {op, op.label, constraint_check(op, convention, tol).pass};
}

Covector4 dual(const Vector4c& psi, const SymOperator& delta) { return lounesto::apply(delta, psi).adjoint() * gamma(0); }

Covector4 dual(const Vector4c& psi, const DualOperator& delta) { return dual(psi, delta.op); }

Matrix4 gamma_word(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("empty gamma word");
  Matrix4 m = Matrix4::Identity();
  for (char ch : digits) {
    if (ch >= '0' && ch <= '3') {
      m = m * gamma(ch - '0');
    } else if (ch == '5') {
      m = m * gamma5();
    } else {
      throw std::invalid_argument(std::string("bad gamma index '") + ch + "' (use 0-3 or 5)");
    }
  }
  return m;
}

SymOperator parse_operator(const std::string& text, const Momentum& p) {
  std::string t = text;
  double sign = 1.0;
  if (!t.empty() && t[0] == '-') {
    sign = -1.0;
    t = t.substr(1);
  }
  if (t.empty()) throw std::invalid_argument("empty dual label");
  SymOperator out = identity_operator();
  std::stringstream parts(t);
  std::string part;
  bool any = false;
  while (std::getline(parts, part, '*')) {
    any = true;
    SymOperator factor;
    if (part.size() > 1 && part[0] == 'g') {
      factor = linear_operator(gamma_word(part.substr(1)), part);
    } else if (auto d = parse_discrete(part)) {
      factor = discrete_operator(*d, p);
    } else {
      throw std::invalid_argument("unknown dual factor '" + part + "' in '" + text + "'");
    }
    out = compose(out, factor);
  }
  if (!any) throw std::invalid_argument("empty dual label");
  out.matrix *= sign;
  out.label = text;
  return out;
}

bool fpk_viability(const SymOperator& delta, const ViabilityOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (int t = 0; t < options.trials; ++t) {
    const Spinor psi = random_spinor(derive_seed(options.seed, kFpkStream, static_cast<std::uint64_t>(t)));
    if (!fpk_check(bilinears(psi.components, delta), options.tol).all_pass()) return false;
  }
  return true;
}

bool singular_fpk_viability(const SymOperator& delta, const ViabilityOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto probes =
      probe_momenta(static_cast<std::size_t>(options.trials), derive_seed(options.seed, kSingularStream, 0));
  for (const auto& p : probes) {
    for (const auto& s : singular_family(p).members()) {
      if (!fpk_check(bilinears(s.components, delta), options.tol).all_pass()) return false;
    }
  }
  return true;
}

std::size_t CandidateGrid::total() const {
  std::size_t n = 0;
  for (const auto& row : cells) {
    for (const auto& cell : row) n += cell.size();
  }
  return n;
}

CandidateGrid enumerate_candidates(const Momentum& p, AntilinearConvention convention) {
  const RelationTable relations = relation_table(p);
  CandidateGrid grid;
  for (Discrete r : kAllDiscrete) {
    const int row = index_of(r);
    const SymOperator left = discrete_operator(r, p);
    for (int col = 0; col < 8; ++col) {
      const RelationEntry& rel = relations.cells[row][col];
      SymOperator op = rel.raw;
      op.label = row == 0 ? to_string(kAllDiscrete[col]) : to_string(r) + "*" + to_string(kAllDiscrete[col]);
      grid.cells[row][col].push_back({make_dual(op, convention), rel.text()});
    }
    for (int col = 8; col < 14; ++col) {
      for (const auto& choice : gamma_column(col)) {
        SymOperator op = compose(left, linear_operator(gamma_word(choice.digits), choice.entry));
        op.label = row == 0 ? choice.entry : to_string(r) + "*" + choice.entry;
        grid.cells[row][col].push_back({make_dual(op, convention), choice.entry});
      }
    }
  }
  return grid;
}

AdmissibleGrid filter_admissible(const CandidateGrid& grid, const ViabilityOptions& options) {
  AdmissibleGrid out;
  out.evaluated = grid;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 14; ++c) {
      for (auto& cand : out.evaluated.cells[r][c]) {
        cand.constraint = cand.dual.admissible;
        cand.fpk = fpk_viability(cand.dual.op, options);
        cand.singular_fpk = singular_fpk_viability(cand.dual.op, options);
        if (cand.constraint && cand.fpk) out.survivors[r][c].insert(cand.entry);
      }
    }
  }
  return out;
}

std::string AdmissibleGrid::markdown() const {
  std::ostringstream out;
  out << "| |";
  for (const char* c : kGridColumns) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < kGridColumns.size(); ++i) out << "---|";
  out << '\n';
  for (Discrete r : kAllDiscrete) {
    out << "| **" << to_string(r) << "** |";
    for (const auto& cell : survivors[index_of(r)]) out << ' ' << join(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string AdmissibleGrid::csv() const {
  std::ostringstream out;
  out << "row";
  for (const char* c : kGridColumns) out << ',' << c;
  out << '\n';
  for (Discrete r : kAllDiscrete) {
    out << to_string(r);
    for (const auto& cell : survivors[index_of(r)]) out << ',' << csv_field(cell.empty() ? "-" : join(cell));
    out << '\n';
  }
  return out.str();
}

const EntrySets& reference_admissible_table() {
  static const EntrySets table = [] {
    EntrySets t;
    auto col = [](const char* name) {
      for (std::size_t i = 0; i < kGridColumns.size(); ++i) {
        if (std::string(kGridColumns[i]) == name) return i;
      }
      throw std::logic_error("bad column");
    };
    auto set = [&](Discrete r, const char* c, std::set<std::string> v) { t[index_of(r)][col(c)] = std::move(v); };
    set(Discrete::Identity, "1", {"1"});
    set(Discrete::Identity, "P", {"P"});
    set(Discrete::Identity, "C", {"C"});
    set(Discrete::Identity, "g0", {"g0"});
    set(Discrete::Identity, "gi", {"g1", "g2"});
    set(Discrete::P, "1", {"P"});
    set(Discrete::P, "P", {"1"});
    set(Discrete::P, "g0", {"g0"});
    set(Discrete::P, "g0i", {"g01", "g02"});
    set(Discrete::C, "1", {"C"});
    set(Discrete::C, "C", {"1"});
    set(Discrete::C, "gi", {"g2"});
    set(Discrete::C, "gij", {"g12"});
    set(Discrete::T, "T", {"-1"});
    set(Discrete::T, "g5", {"g5"});
    set(Discrete::T, "g0i", {"g03"});
    set(Discrete::T, "g5i", {"g52"});
    set(Discrete::CP, "CP", {"-1"});
    set(Discrete::CP, "g0", {"g0"});
    set(Discrete::CP, "g0i", {"g02"});
    set(Discrete::CP, "gij", {"g13"});
    set(Discrete::CT, "CT", {"-1"});
    set(Discrete::CT, "g5", {"g5"});
    set(Discrete::CT, "g0i", {"g05"});
    set(Discrete::CT, "g5i", {"g51", "g52"});
    set(Discrete::PT, "PT", {"-1"});
    set(Discrete::PT, "gi", {"g3"});
    set(Discrete::PT, "g0i", {"g02"});
    set(Discrete::PT, "gij", {"g13"});
    set(Discrete::PT, "g5i", {"g50"});
    set(Discrete::CPT, "CPT", {"1"});
    set(Discrete::CPT, "g5", {"g5"});
    set(Discrete::CPT, "gij", {"g13", "g23"});
    return t;
  }();
  return table;
}

std::vector<CellMismatch> compare_cells(const EntrySets& measured, const EntrySets& expected) {
  std::vector<CellMismatch> out;
  for (Discrete r : kAllDiscrete) {
    for (std::size_t c = 0; c < kGridColumns.size(); ++c) {
      const auto& m = measured[index_of(r)][c];
      const auto& e = expected[index_of(r)][c];
      if (m != e) out.push_back({to_string(r), kGridColumns[c], m, e});
    }
  }
  return out;
}

DualOperator sum_duals(const std::vector<DualOperator>& deltas, const std::vector<double>& weights,
                       AntilinearConvention convention, double tol) {
  if (deltas.empty()) throw std::invalid_argument("sum_duals needs at least one operator");
  if (deltas.size() != weights.size()) throw std::invalid_argument("sum_duals: weights and operators differ in length");
  const bool antilinear = deltas.front().op.antilinear;
  SymOperator sum{Matrix4::Zero(), antilinear, ""};
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const auto& d = deltas[k];
    if (d.op.antilinear != antilinear) {
      throw std::invalid_argument("sum_duals: cannot add linear and antilinear operators");
    }
    if (!constraint_check(d.op, convention, tol).pass) {
      throw std::invalid_argument("sum_duals: operator '" + d.label + "' is not admissible");
    }
    sum.matrix += weights[k] * d.op.matrix;
    std::ostringstream term;
    term << (k == 0 ? "" : " + ") << weights[k] << "*" << d.label;
    sum.label += term.str();
  }
  return make_dual(sum, convention, tol);
}

}  // namespace lounesto
