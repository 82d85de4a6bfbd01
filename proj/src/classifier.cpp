#include "lounesto/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "lounesto/clifford.hpp"
#include "lounesto/random.hpp"

namespace lounesto {
namespace {

constexpr std::uint64_t kWitnessStream = 0x7769746eULL;
constexpr std::uint64_t kCensusStream = 0x63656e73ULL;

double inf_norm(const Complex& z) { return std::abs(z); }

template <std::size_t N>
double inf_norm(const std::array<Complex, N>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::array<double, 5> magnitudes(const BilinearSet& b) {
  return {inf_norm(b.sigma), inf_norm(b.omega), inf_norm(b.J), inf_norm(b.K), inf_norm(b.S)};
}

// Real residual vector of the quantities a pattern requires to vanish, with psi normalized.
struct ProjectionFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  Pattern target;
  SymOperator delta;
  int n_values;

  int inputs() const { return 8; }
  int values() const { return n_values; }

  static Vector4c spinor(const Eigen::VectorXd& x) {
    Vector4c psi;
    for (int i = 0; i < 4; ++i) psi(i) = Complex(x(i), x(4 + i));
    const double n = psi.norm();
    return n > 0.0 ? Vector4c(psi / n) : psi;
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const BilinearSet b = bilinears(spinor(x), delta);
    f = Eigen::VectorXd::Zero(n_values);
    int k = 0;
    auto push = [&](const Complex& z) {
      f(k++) = z.real();
      f(k++) = z.imag();
    };
    if (!target[0]) push(b.sigma);
    if (!target[1]) push(b.omega);
    if (!target[2]) for (const auto& z : b.J) push(z);
    if (!target[3]) for (const auto& z : b.K) push(z);
    if (!target[4]) for (const auto& z : b.S) push(z);
    return 0;
  }
};

int zero_values(const Pattern& p) {
  const std::array<int, 5> sizes{2, 2, 8, 8, 12};
  int n = 0;
  for (int i = 0; i < 5; ++i) n += p[i] ? 0 : sizes[i];
  return std::max(n, 8);
}

Vector4c project(const Vector4c& start, const Pattern& target, const SymOperator& delta) {
  ProjectionFunctor functor{target, delta, zero_values(target)};
  Eigen::NumericalDiff<ProjectionFunctor, Eigen::Central> numeric(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ProjectionFunctor, Eigen::Central>, double> lm(numeric);
  lm.parameters.xtol = 1e-15;
  lm.parameters.ftol = 1e-15;
  lm.parameters.maxfev = 4000;
  Eigen::VectorXd x(8);
  for (int i = 0; i < 4; ++i) {
    x(i) = start(i).real();
    x(4 + i) = start(i).imag();
  }
  lm.minimize(x);
  return ProjectionFunctor::spinor(x);
}

std::vector<Spinor> pool_spinors(std::uint64_t seed) {
  std::vector<Momentum> momenta{Momentum::rest(1.0)};
  for (const auto& p : probe_momenta(2, seed)) momenta.push_back(p);
  std::vector<Spinor> pool;
  for (const auto& p : momenta) {
    for (const auto& s : regular_family(p).members()) pool.push_back(s);
    for (const auto& s : singular_family(p).members()) pool.push_back(s);
  }
  for (int i = 0; i < 4; ++i) {
    Spinor e;
    e.components = Vector4c::Unit(i);
    e.h = "e" + std::to_string(i);
    pool.push_back(e);
  }
  return pool;
}

bool accept(const LounestoLabel& target, const Vector4c& psi, const SymOperator& delta, const Tolerances& tol,
            Witness& out) {
  const BilinearSet b = bilinears(psi, delta);
  const LounestoLabel label = classify(b, tol.cls);
  if (!(label == target)) return false;
  if (!fpk_check(b, tol.fpk).all_pass()) return false;
  ConstraintCheck check = verify_constraints(label, b, tol.fpk);
  if (!check.all_pass()) return false;
  out.bilinears = b;
  out.label = label;
  out.constraints = std::move(check);
  return true;
}

}  // namespace

std::string LounestoLabel::name() const {
  if (verdict == Verdict::Unclassifiable) return "unclassifiable";
  std::string s = std::to_string(major);
  if (sub != 0) s += "." + std::to_string(sub);
  if (verdict == Verdict::Forbidden) s += "*";
  return s;
}

std::optional<LounestoLabel> parse_label(const std::string& text) {
  for (const auto& r : kAllowedClasses) {
    if (text == r.name) return LounestoLabel{r.major, r.sub, Verdict::Allowed};
  }
  for (const auto& r : kForbiddenClasses) {
    if (text == r.name) return LounestoLabel{r.major, r.sub, Verdict::Forbidden};
  }
  if (text == "unclassifiable") return LounestoLabel{};
  return std::nullopt;
}

VanishingPattern vanishing_pattern(const BilinearSet& b, double tol) {
  VanishingPattern p;
  const auto mags = magnitudes(b);
  p.scale = *std::max_element(mags.begin(), mags.end());
  p.margin = 300.0;
  for (int i = 0; i < 5; ++i) {
    p.relative[i] = p.scale > 0.0 ? mags[i] / p.scale : 0.0;
    p.nonzero[i] = p.scale > 0.0 && mags[i] > tol * p.scale;
    if (p.relative[i] > 0.0) p.margin = std::min(p.margin, std::abs(std::log10(p.relative[i] / tol)));
  }
  return p;
}

LounestoLabel lookup(const Pattern& nonzero) {
  for (const auto& r : kAllowedClasses) {
    if (r.nonzero == nonzero) return {r.major, r.sub, Verdict::Allowed};
  }
  for (const auto& r : kForbiddenClasses) {
    if (r.nonzero == nonzero) return {r.major, r.sub, Verdict::Forbidden};
  }
  return {};
}

LounestoLabel classify(const BilinearSet& b, double tol) { return lookup(vanishing_pattern(b, tol).nonzero); }

bool ConstraintCheck::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ConstraintItem& i) { return i.pass || !i.gating; });
}

const ConstraintItem* ConstraintCheck::find(const std::string& name) const {
  for (const auto& i : items) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

ConstraintCheck verify_constraints(const LounestoLabel& label, const BilinearSet& b, double tol) {
  ConstraintCheck out;
  if (label.verdict != Verdict::Allowed) return out;
  const auto mags = magnitudes(b);
  const double scale = std::max(*std::max_element(mags.begin(), mags.end()), 1e-300);

  // Class 1 with J = 0 or K = 0 forces J^2 = 0.
  const bool constraint_one = label.major == 1 && label.sub >= 2;
  if (constraint_one) {
    const Complex plus = b.sigma - kI * b.omega;
    const Complex minus = b.sigma + kI * b.omega;
    const double ref = std::max({std::abs(b.sigma), std::abs(b.omega), 1e-300});
    const bool plus_branch = std::abs(plus) <= std::abs(minus);
    const double branch = std::min(std::abs(plus), std::abs(minus)) / ref;
    out.items.push_back({"sigma=+-i*omega", branch, branch <= tol, true});

    double signed_res = 0.0;
    double literal_res = 0.0;
    const double sign = plus_branch ? 1.0 : -1.0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        Complex dual_s{};
        for (int a = 0; a < 4; ++a) {
          for (int c = 0; c < 4; ++c) {
            const int e = epsilon(mu, nu, a, c);
            if (e != 0) dual_s += static_cast<double>(e) * kMetric[a] * kMetric[c] * b.s(a, c);
          }
        }
        const Complex lhs = 2.0 * kI * b.s(mu, nu);
        signed_res = std::max(signed_res, std::abs(lhs - sign * dual_s));
        literal_res = std::max(literal_res, std::abs(lhs - dual_s));
      }
    }
    signed_res /= scale;
    literal_res /= scale;
    out.items.push_back({"2iS=+-eps.S (branch sign)", signed_res, signed_res <= tol, true});
    out.items.push_back({"2iS=eps.S (unsigned)", literal_res, literal_res <= tol, false});
  }

  Pattern nz{};
  for (const auto& r : kAllowedClasses) {
    if (r.major == label.major && r.sub == label.sub) nz = r.nonzero;
  }
  const bool j_nonzero = nz[2];
  const bool k_nonzero = nz[3];
  const bool s_zero = !nz[4];
  if (j_nonzero && k_nonzero && s_zero) {
    double res = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) res = std::max(res, std::abs(b.J[mu] * b.K[nu] - b.J[nu] * b.K[mu]));
    }
    res /= scale * scale;
    out.items.push_back({"J_mu K_nu = J_nu K_mu", res, res <= tol, true});
  }
  return out;
}

Witness find_witness(const LounestoLabel& target, const std::vector<DualOperator>& duals,
                     const WitnessOptions& options) {
  if (target.verdict != Verdict::Allowed) {
    throw std::invalid_argument("witness target '" + target.name() + "' is not an allowed class");
  }
  if (duals.empty()) throw std::invalid_argument("find_witness needs at least one dual");
  Pattern pattern{};
  for (const auto& r : kAllowedClasses) {
    if (r.major == target.major && r.sub == target.sub) pattern = r.nonzero;
  }

  Witness w;
  std::uint64_t trial = 0;
  if (options.use_pools) {
    const auto pool = pool_spinors(options.seed);
    for (const auto& d : duals) {
      for (const auto& s : pool) {
        if (trial >= options.budget) break;
        if (accept(target, s.components, d.op, options.tol, w)) {
          w.spinor = s;
          w.dual = d;
          w.trial = trial;
          w.from_pool = true;
          return w;
        }
        ++trial;
      }
    }
  }
  for (std::uint64_t t = 0; trial < options.budget; ++t, ++trial) {
    const DualOperator& d = duals[t % duals.size()];
    Spinor s = random_spinor(derive_seed(options.seed, kWitnessStream, t));
    s.components = project(s.components, pattern, d.op);
    if (accept(target, s.components, d.op, options.tol, w)) {
      s.h = "projected";
      w.spinor = s;
      w.dual = d;
      w.trial = trial;
      return w;
    }
  }
  throw NotFound("no witness for class " + target.name() + " within " + std::to_string(options.budget) +
                 " trials (not a proof of emptiness)");
}

std::vector<DualOperator> admissible_duals(AntilinearConvention convention) {
  const CandidateGrid grid = enumerate_candidates(Momentum::rest(1.0), convention);
  std::vector<DualOperator> out;
  for (const auto& row : grid.cells) {
    for (const auto& cell : row) {
      for (const auto& cand : cell) {
        if (!cand.dual.admissible) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const DualOperator& d) {
          return same_operator(d.op, cand.dual.op, Tolerances{}.zero);
        });
        if (!seen) out.push_back(cand.dual);
      }
    }
  }
  return out;
}

std::vector<CensusRow> census(const std::vector<DualOperator>& duals, std::uint64_t trials, std::uint64_t seed,
                              double tol) {
  if (trials < 1) throw std::invalid_argument("census needs trials >= 1");
  std::vector<CensusRow> rows;
  for (std::size_t k = 0; k < duals.size(); ++k) {
    CensusRow row{duals[k].label, {}};
    for (std::uint64_t t = 0; t < trials; ++t) {
      const Spinor psi = random_spinor(derive_seed(seed, kCensusStream + k, t));
      row.counts[classify(bilinears(psi.components, duals[k].op), tol).name()] += 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string tables_markdown() {
  std::ostringstream out;
  auto emit = [&out](const char* title, const auto& rows) {
    out << "| " << title << " | sigma | omega | J | K | S |\n|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      out << "| " << r.name << " |";
      for (bool nz : r.nonzero) out << (nz ? " !=0 |" : " =0 |");
      out << '\n';
    }
  };
  emit("Allowed", kAllowedClasses);
  out << '\n';
  emit("Forbidden", kForbiddenClasses);
  return out.str();
}

}  // namespace lounesto
