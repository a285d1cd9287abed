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
#include <cstdint>
#include <random>
#include <vector>

#include "coherence_lab/linalg.hpp"
#include "coherence_lab/states.hpp"

namespace coherence_lab {

/// The generator behind every randomised routine; seeded explicitly so that
/// runs are reproducible.
using Rng = std::mt19937_64;

std::vector<double> random_phases(std::size_t d, Rng& rng);
/// Uniform point of the probability simplex (Dirichlet(1,...,1)).
std::vector<double> random_probabilities(std::size_t n, Rng& rng);
/// 0-based permutation: column j of the permutation matrix has its 1 in row perm[j].
std::vector<std::size_t> random_permutation(std::size_t d, Rng& rng);
ComplexMatrix permutation_matrix(const std::vector<std::size_t>& perm);
/// Matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar-random unitary (Gram-Schmidt on a Ginibre matrix).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);
/// Haar-random pure state.
PureState random_pure_state(std::size_t d, Rng& rng);
/// G G^dagger / Tr with G a d x rank Ginibre matrix.
DensityMatrix random_density(std::size_t d, Rng& rng, std::size_t rank = 0);

}  // namespace coherence_lab
