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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "coherence_lab/linalg.hpp"

namespace coherence_lab {

/// Default validation tolerance for states and channels.
inline constexpr double kDefaultTol = 1e-9;

/// Returned by relative_entropy when supp(rho) is not contained in supp(sigma).
inline constexpr double kInfiniteEntropy = std::numeric_limits<double>::infinity();

/// Unit vector sum_k alpha_k |k>.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes, double tol = kDefaultTol);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  /// |phi><phi|
  ComplexMatrix projector() const { return ComplexMatrix::outer(amplitudes_); }

 private:
  std::vector<Complex> amplitudes_;
};

/// Diagonal state sum_k p_k |k><k|, stored as its probability vector.
class IncoherentState {
 public:
  explicit IncoherentState(std::vector<double> probs, double tol = kDefaultTol);

  std::size_t dim() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  ComplexMatrix matrix() const { return ComplexMatrix::diagonal(std::span<const double>(probs_)); }

 private:
  std::vector<double> probs_;
};

/// Hermitian, positive semidefinite, unit-trace matrix with its spectrum
/// computed once at construction.
class DensityMatrix {
 public:
  /// Throws ValidationError naming the violated invariant ("square",
  /// "hermitian", "trace", "positive-semidefinite").
  explicit DensityMatrix(const ComplexMatrix& m, double tol = kDefaultTol);
  explicit DensityMatrix(const PureState& psi, double tol = kDefaultTol);
  explicit DensityMatrix(const IncoherentState& p, double tol = kDefaultTol);

  static DensityMatrix maximally_mixed(std::size_t d);

  std::size_t dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  std::span<const double> eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  double tol() const noexcept { return tol_; }
  /// Tr(rho^2)
  double purity() const;

 private:
  ComplexMatrix mat_;
  Spectrum spectrum_;
  double tol_;
};

/// Weighted family {p_n, rho_n} of equal-dimension states.
class Ensemble {
 public:
  Ensemble(std::vector<double> weights, std::vector<DensityMatrix> members,
           double tol = kDefaultTol);

  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const DensityMatrix> members() const noexcept { return members_; }
  /// sum_n p_n rho_n
  DensityMatrix mixture() const;

 private:
  std::vector<double> weights_;
  std::vector<DensityMatrix> members_;
};

/// Diagonal of rho as a probability vector.
IncoherentState dephase(const DensityMatrix& rho);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probs);

/// Von Neumann entropy in bits. Eigenvalues in [-tol, 0) are clipped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma) = Tr(rho log2 rho - rho log2 sigma), evaluated in the
/// eigenbasis of sigma. Returns kInfiniteEntropy when rho has weight above
/// `tol` on the kernel of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double tol = kDefaultTol);

/// (rho_A, rho_B) for a state on C^{d_a} (x) C^{d_b}.
std::pair<DensityMatrix, DensityMatrix> reduced_states(const DensityMatrix& rho, std::size_t d_a,
                                                       std::size_t d_b);

/// sum_k e^{i theta_k} |k> / sqrt(d)
PureState pure_from_phases(std::span<const double> theta);

}  // namespace coherence_lab
