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

#include "coherence_lab/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "coherence_lab/coherence.hpp"
#include "coherence_lab/errors.hpp"

namespace coherence_lab {

SuperAdditivityReport superadditivity_report(const DensityMatrix& rho, std::size_t d_a,
                                             std::size_t d_b, double tol) {
  auto [rho_a, rho_b] = reduced_states(rho, d_a, d_b);
  SuperAdditivityReport r;
  r.c_ab = c_re(rho);
  r.c_a = c_re(rho_a);
  r.c_b = c_re(rho_b);
  r.gap = r.c_ab - r.c_a - r.c_b;
  r.equality = std::abs(r.gap) <= tol;
  r.product_distance = frobenius_distance(rho.matrix(), kron(rho_a.matrix(), rho_b.matrix()));
  r.is_product = r.product_distance <= tol;
  return r;
}

double phase_separability_defect(const PhaseMatrix& theta) {
  double worst = 0.0;
  for (std::size_t i = 0; i < theta.d_a(); ++i) {
    for (std::size_t ip = 0; ip < theta.d_a(); ++ip) {
      for (std::size_t j = 0; j < theta.d_b(); ++j) {
        for (std::size_t t = 0; t < theta.d_b(); ++t) {
          const double v = theta(i, j) - theta(i, t) - theta(ip, j) + theta(ip, t);
          worst = std::max(worst, std::abs(wrap_phase(v)));
        }
      }
    }
  }
  return worst;
}

Result2Verdict result2_check(const PhaseMatrix& theta, double tol, double phase_tol) {
  if (theta.d_a() != theta.d_b()) {
    throw NotSquare("result2_check: phase matrix is " + std::to_string(theta.d_a()) + "x" +
                    std::to_string(theta.d_b()));
  }
  Result2Verdict v;
  v.report = superadditivity_report(theta.density(), theta.d_a(), theta.d_b(), tol);
  v.equality = v.report.equality;
  v.is_product = v.report.is_product;
  v.phases_consistent = phase_separability_defect(theta) <= phase_tol;
  return v;
}

CounterexampleState counterexample_23(double theta) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    throw OutOfRange("counterexample_23: theta must lie in (0, 2pi), got " + std::to_string(theta));
  }
  std::vector<double> phases(6);
  for (std::size_t k = 0; k < phases.size(); ++k) phases[k] = static_cast<double>(k) * theta;
  DensityMatrix rho(pure_from_phases(phases));
  SuperAdditivityReport report = superadditivity_report(rho, 2, 3);
  return {std::move(rho), report};
}

PhaseMatrix max_entangled_phases(std::size_t d) {
  std::vector<double> theta(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      theta[i * d + j] = -2.0 * std::numbers::pi * static_cast<double>(i * j) /
                         static_cast<double>(d);
    }
  }
  return PhaseMatrix(d, d, std::move(theta));
}

DensityMatrix make_mcs_max_entangled(std::size_t d) {
  if (d < 2) throw OutOfRange("make_mcs_max_entangled: d must be at least 2");
  return max_entangled_phases(d).density();
}

}  // namespace coherence_lab
