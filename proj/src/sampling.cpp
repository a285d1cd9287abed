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

#include "coherence_lab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace coherence_lab {

std::vector<double> random_phases(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(d);
  for (auto& t : theta) t = angle(rng);
  return theta;
}

std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  for (auto& x : p) x = expo(rng);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  return p;
}

std::vector<std::size_t> random_permutation(std::size_t d, Rng& rng) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

ComplexMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  ComplexMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1.0;
  return m;
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  ComplexMatrix q = ginibre(d, d, rng);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t prev = 0; prev < k; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < d; ++r) overlap += std::conj(q(r, prev)) * q(r, k);
      for (std::size_t r = 0; r < d; ++r) q(r, k) -= overlap * q(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < d; ++r) norm += std::norm(q(r, k));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < d; ++r) q(r, k) /= norm;
  }
  return q;
}

PureState random_pure_state(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, 1, rng);
  const double norm = g.frobenius_norm();
  std::vector<Complex> amps(g.entries().begin(), g.entries().end());
  for (auto& a : amps) a /= norm;
  return PureState(std::move(amps));
}

DensityMatrix random_density(std::size_t d, Rng& rng, std::size_t rank) {
  if (rank == 0) rank = d;
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  return DensityMatrix(m);
}

}  // namespace coherence_lab
