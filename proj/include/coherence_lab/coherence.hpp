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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coherence_lab/states.hpp"

namespace coherence_lab {

/// Relative entropy of coherence, S(rho_diag) - S(rho), in bits.
double c_re(const DensityMatrix& rho);

/// Relative entropy of coherence by direct minimisation of S(rho || sigma)
/// over diagonal sigma: a coarse simplex grid with `grid` steps per axis,
/// then pairwise coordinate descent with golden-section line search.
/// Slow; meant as an independent check of c_re.
double c_re_via_minimization(const DensityMatrix& rho, int grid = 12);

/// l1 coherence: sum of |rho_ij| over i != j.
double c_l1(const DensityMatrix& rho);

inline constexpr double kDefaultMcsTol = 1e-7;

struct CoherenceReport {
  double value = 0.0;         // c_re(rho), bits
  double max_possible = 0.0;  // log2 d
  bool is_mcs = false;
  /// arg(alpha_k) - arg(alpha_1) in [0, 2pi); present iff is_mcs.
  std::optional<std::vector<double>> witness_phases;
};

/// Maximally-coherent-state test: rho is (numerically) rank one,
/// lambda_max >= 1 - mcs_tol, and every diagonal entry is within mcs_tol of
/// 1/d. Such states are exactly U|psi_d><psi_d|U^dagger with U diagonal
/// unitary; the witness phases are the diagonal of U with theta_1 = 0.
CoherenceReport is_mcs(const DensityMatrix& rho, double mcs_tol = kDefaultMcsTol);

/// U|psi_d><psi_d|U^dagger with U = diag(e^{i theta_k}). Throws
/// DimensionMismatch if theta.size() != d.
DensityMatrix make_mcs(std::span<const double> theta, std::size_t d);

/// Probability vector on four outcomes for the piecewise measure below.
class CfInput {
 public:
  explicit CfInput(std::array<double, 4> x, double tol = kDefaultTol);
  const std::array<double, 4>& x() const noexcept { return x_; }

 private:
  std::array<double, 4> x_;
};

/// f(x) = H(x) if the least entry of x is zero, log2 3 otherwise. Entries
/// below 1e-12 count as zero.
double cf_measure(const CfInput& x);

}  // namespace coherence_lab
