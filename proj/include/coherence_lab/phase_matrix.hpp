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
#include <vector>

#include "coherence_lab/states.hpp"

namespace coherence_lab {

/// Wrap an angle into (-pi, pi].
double wrap_phase(double angle);
/// Wrap an angle into [0, 2pi).
double wrap_phase_positive(double angle);

/// Real phase table theta_{ij} (radians) of a bipartite uniform-modulus state
///   |phi> = sum_{ij} e^{i theta_{ij}} |i, j> / sqrt(d_a d_b).
/// Indices are 0-based; the composite basis index of |i,j> is i*d_b + j.
class PhaseMatrix {
 public:
  PhaseMatrix(std::size_t d_a, std::size_t d_b, std::vector<double> theta);

  std::size_t d_a() const noexcept { return d_a_; }
  std::size_t d_b() const noexcept { return d_b_; }
  double operator()(std::size_t i, std::size_t j) const { return theta_[i * d_b_ + j]; }
  const std::vector<double>& values() const noexcept { return theta_; }

  /// Gauge-fixed copy: theta_{11} subtracted everywhere, entries in [0, 2pi).
  PhaseMatrix normalized() const;
  PureState pure_state() const;
  DensityMatrix density() const;

 private:
  std::size_t d_a_;
  std::size_t d_b_;
  std::vector<double> theta_;
};

}  // namespace coherence_lab
