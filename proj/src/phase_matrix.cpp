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

#include "coherence_lab/phase_matrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "coherence_lab/errors.hpp"

namespace coherence_lab {

double wrap_phase(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(angle, two_pi);  // [-pi, pi]
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

double wrap_phase_positive(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(angle, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

PhaseMatrix::PhaseMatrix(std::size_t d_a, std::size_t d_b, std::vector<double> theta)
    : d_a_(d_a), d_b_(d_b), theta_(std::move(theta)) {
  if (d_a == 0 || d_b == 0 || theta_.size() != d_a * d_b) {
    throw DimensionMismatch("phase matrix: expected " + std::to_string(d_a * d_b) + " entries");
  }
  for (double t : theta_) {
    if (!std::isfinite(t)) throw ValidationError("finite", "phase entries must be finite");
  }
}

PhaseMatrix PhaseMatrix::normalized() const {
  std::vector<double> out(theta_.size());
  for (std::size_t k = 0; k < theta_.size(); ++k) out[k] = wrap_phase_positive(theta_[k] - theta_[0]);
  return PhaseMatrix(d_a_, d_b_, std::move(out));
}

PureState PhaseMatrix::pure_state() const { return pure_from_phases(theta_); }

DensityMatrix PhaseMatrix::density() const { return DensityMatrix(pure_state()); }

}  // namespace coherence_lab
