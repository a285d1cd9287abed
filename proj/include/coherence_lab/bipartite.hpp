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

#pragma once

#include <cstddef>

#include "coherence_lab/phase_matrix.hpp"
#include "coherence_lab/states.hpp"

namespace coherence_lab {

/// Default tolerance for the equality and product verdicts below.
inline constexpr double kBipartiteTol = 1e-7;

/// Both sides of C(rho_AB) >= C(rho_A) + C(rho_B).
struct SuperAdditivityReport {
  double c_ab = 0.0;
  double c_a = 0.0;
  double c_b = 0.0;
  double gap = 0.0;  // c_ab - c_a - c_b
  bool equality = false;           // |gap| <= tol
  bool is_product = false;         // product_distance <= tol
  double product_distance = 0.0;   // ||rho_AB - rho_A (x) rho_B||_F
};

SuperAdditivityReport superadditivity_report(const DensityMatrix& rho, std::size_t d_a,
                                             std::size_t d_b, double tol = kBipartiteTol);

/// max over (i, i', j, t) of |wrap(theta_ij - theta_it - theta_i'j + theta_i't)|.
double phase_separability_defect(const PhaseMatrix& theta);

struct Result2Verdict {
  bool equality = false;
  bool is_product = false;
  bool phases_consistent = false;
  SuperAdditivityReport report;

  bool all_agree() const noexcept {
    return equality == is_product && is_product == phases_consistent;
  }
};

/// Builds the pure state of a square phase table and evaluates the three
/// predicates that coincide for maximally coherent states with d_a = d_b:
/// super-additivity equality, rho = rho_A (x) rho_B, and separability of the
/// phases mod 2pi (defect <= phase_tol). Throws NotSquare if d_a != d_b.
Result2Verdict result2_check(const PhaseMatrix& theta, double tol = kBipartiteTol,
                             double phase_tol = 1e-9);

struct CounterexampleState {
  DensityMatrix rho;
  SuperAdditivityReport report;
};

/// The 2x3 state with amplitudes e^{i k theta}/sqrt(6), k = 0..5.
/// Throws OutOfRange unless 0 < theta < 2pi.
CounterexampleState counterexample_23(double theta);

/// theta_ij = -2 pi i j / d (0-based): every pair of rows has vanishing phase
/// sum, so the reduced state is I/d.
PhaseMatrix max_entangled_phases(std::size_t d);

/// Pure state on C^d (x) C^d that is both maximally coherent and maximally
/// entangled. Throws OutOfRange for d < 2.
DensityMatrix make_mcs_max_entangled(std::size_t d);

}  // namespace coherence_lab
