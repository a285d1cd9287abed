// Copyright 2026 The coherence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherence_lab/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "coherence_lab/errors.hpp"
#include "coherence_lab/phase_matrix.hpp"

namespace coherence_lab {

namespace {

constexpr double kCfZero = 1e-12;

// Minimal S(rho || diag(sigma)) searched below; never touches rho_diag.
class DiagonalRelativeEntropy {
 public:
  explicit DiagonalRelativeEntropy(const DensityMatrix& rho) : rho_(rho) {}

  double operator()(const std::vector<double>& sigma) const {
    for (double s : sigma) {
      if (s < 0.0) return kInfiniteEntropy;
    }
    return relative_entropy(rho_, DensityMatrix(IncoherentState(sigma, 1e-9), 1e-9), 0.0);
  }

 private:
  const DensityMatrix& rho_;
};

// Enumerates compositions of `grid` into d parts.
void for_each_simplex_point(std::size_t d, int grid,
                            const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<int> counts(d, 0);
  std::vector<double> point(d);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
    if (k + 1 == d) {
      counts[k] = remaining;
      for (std::size_t i = 0; i < d; ++i) point[i] = static_cast<double>(counts[i]) / grid;
      visit(point);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[k] = c;
      rec(k + 1, remaining - c);
    }
  };
  rec(0, grid);
}

// Golden-section minimisation of f on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = f(c);
  double fe = f(e);
  while (b - a > 1e-14) {
    if (fc < fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = f(e);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double c_re(const DensityMatrix& rho) {
  const double value = shannon_entropy(dephase(rho).probs()) - von_neumann_entropy(rho);
  return std::max(0.0, value);
}

double c_re_via_minimization(const DensityMatrix& rho, int grid) {
  const std::size_t d = rho.dim();
  if (d == 1) return 0.0;
  if (grid < 1) throw OutOfRange("c_re_via_minimization: grid must be positive");
  const DiagonalRelativeEntropy objective(rho);

  std::vector<double> best;
  double best_value = kInfiniteEntropy;
  for_each_simplex_point(d, grid, [&](const std::vector<double>& sigma) {
    const double v = objective(sigma);
    if (v < best_value) {
      best_value = v;
      best = sigma;
    }
  });
  if (best.empty()) {
    // Every grid point misses part of the support; start from the barycentre.
    best.assign(d, 1.0 / static_cast<double>(d));
    best_value = objective(best);
  }

  // Pairwise transfers sigma_p += t, sigma_q -= t keep sigma on the simplex.
  for (int sweep = 0; sweep < 500; ++sweep) {
    const double before = best_value;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double total = best[p] + best[q];
        auto along = [&](double s) {
          std::vector<double> trial = best;
          trial[p] = s;
          trial[q] = total - s;
          return objective(trial);
        };
        const double s = golden_section(along, 0.0, total);
        const double v = along(s);
        if (v < best_value) {
          best_value = v;
          best[p] = s;
          best[q] = total - s;
        }
      }
    }
    if (before - best_value < 1e-15) break;
  }
  return best_value;
}

double c_l1(const DensityMatrix& rho) {
  double sum = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      if (r != c) sum += std::abs(rho.matrix()(r, c));
    }
  }
  return sum;
}

CoherenceReport is_mcs(const DensityMatrix& rho, double mcs_tol) {
  const std::size_t d = rho.dim();
  CoherenceReport report;
  report.value = c_re(rho);
  report.max_possible = std::log2(static_cast<double>(d));

  const bool pure = rho.eigenvalues().front() >= 1.0 - mcs_tol;
  const double uniform = 1.0 / static_cast<double>(d);
  bool flat = true;
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(rho.matrix()(k, k).real() - uniform) > mcs_tol) flat = false;
  }
  report.is_mcs = pure && flat;
  if (report.is_mcs) {
    // rho_{k1} = alpha_k conj(alpha_1), so its argument is theta_k - theta_1.
    std::vector<double> theta(d, 0.0);
    for (std::size_t k = 1; k < d; ++k) theta[k] = wrap_phase_positive(std::arg(rho.matrix()(k, 0)));
    report.witness_phases = std::move(theta);
  }
  return report;
}

DensityMatrix make_mcs(std::span<const double> theta, std::size_t d) {
  if (theta.size() != d) {
    throw DimensionMismatch("make_mcs: " + std::to_string(theta.size()) + " phases for d = " +
                            std::to_string(d));
  }
  return DensityMatrix(pure_from_phases(theta));
}

CfInput::CfInput(std::array<double, 4> x, double tol) : x_(x) {
  IncoherentState(std::vector<double>(x.begin(), x.end()), tol);
  for (double& v : x_) {
    if (v < kCfZero) v = 0.0;
  }
}

double cf_measure(const CfInput& input) {
  const auto& x = input.x();
  if (*std::min_element(x.begin(), x.end()) == 0.0) return shannon_entropy(x);
  return std::log2(3.0);
}

}  // namespace coherence_lab
