#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lounesto/bilinears.hpp"
#include "lounesto/clifford.hpp"
#include "lounesto/duals.hpp"
#include "lounesto/random.hpp"

namespace lounesto::testing {

inline Matrix4 random_matrix(std::uint64_t seed) {
  Engine rng(seed);
  std::normal_distribution<double> n;
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  }
  return m;
}

inline double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

/// Taylor series of exp(x), summed until the terms vanish.
inline Matrix4 taylor_exp(const Matrix4& x) {
  Matrix4 sum = Matrix4::Identity();
  Matrix4 term = Matrix4::Identity();
  for (int k = 1; k < 60; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

struct TableIvDual {
  std::string row, column, entry;
  SymOperator op;
};

/// Every operator named in the published admissible grid, built the way the grid defines it.
inline std::vector<TableIvDual> table_iv_duals(const Momentum& p) {
  const CandidateGrid grid = enumerate_candidates(p);
  const EntrySets& ref = reference_admissible_table();
  std::vector<TableIvDual> out;
  for (Discrete r : kAllDiscrete) {
    const int row = index_of(r);
    for (std::size_t col = 0; col < kGridColumns.size(); ++col) {
      for (const auto& entry : ref[row][col]) {
        const auto hit = std::find_if(grid.cells[row][col].begin(), grid.cells[row][col].end(),
                                      [&](const Candidate& c) { return c.entry == entry; });
        SymOperator op;
        if (hit != grid.cells[row][col].end()) {
          op = hit->dual.op;
        } else if (col < 8) {
          op = parse_operator(entry, p);
        } else {
          op = compose(discrete_operator(r, p), linear_operator(gamma_word(entry.substr(1)), entry));
        }
        out.push_back({to_string(r), kGridColumns[col], entry, op});
      }
    }
  }
  return out;
}

inline double bilinear_scale(const BilinearSet& b) {
  double s = std::max(std::abs(b.sigma), std::abs(b.omega));
  for (const auto& v : b.J) s = std::max(s, std::abs(v));
  for (const auto& v : b.K) s = std::max(s, std::abs(v));
  for (const auto& v : b.S) s = std::max(s, std::abs(v));
  return s;
}

/// min |sigma -+ i omega| relative to max(|sigma|, |omega|).
inline double sigma_omega_residual(const BilinearSet& b) {
  const double scale = std::max({std::abs(b.sigma), std::abs(b.omega), 1e-300});
  return std::min(std::abs(b.sigma - kI * b.omega), std::abs(b.sigma + kI * b.omega)) / scale;
}

/// max over mu<nu of |2i S_mu nu - eps_mu nu a b S^a b| relative to max |S|.
inline double self_duality_residual(const BilinearSet& b) {
  double scale = 1e-300;
  for (const auto& v : b.S) scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  for (const auto& pair : kBivectorPairs) {
    Complex rhs = 0.0;
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        rhs += static_cast<double>(epsilon(pair[0], pair[1], a, c)) * kMetric[a] * kMetric[c] * b.s(a, c);
      }
    }
    worst = std::max(worst, std::abs(2.0 * kI * b.s(pair[0], pair[1]) - rhs));
  }
  return worst / scale;
}

/// max |J_mu K_nu - J_nu K_mu| relative to max|J| max|K|.
inline double rank_one_residual(const BilinearSet& b) {
  double j = 1e-300, k = 1e-300, worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    j = std::max(j, std::abs(b.J[mu]));
    k = std::max(k, std::abs(b.K[mu]));
    for (int nu = 0; nu < 4; ++nu) worst = std::max(worst, std::abs(b.J[mu] * b.K[nu] - b.J[nu] * b.K[mu]));
  }
  return worst / (j * k);
}

}  // namespace lounesto::testing
