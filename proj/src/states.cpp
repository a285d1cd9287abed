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

#include "coherence_lab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coherence_lab/errors.hpp"

namespace coherence_lab {

namespace {

double clipped(double lambda, double tol) { return (lambda < 0.0 && lambda >= -tol) ? 0.0 : lambda; }

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ValidationError("dimension", "pure state must have d >= 1");
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("finite", "amplitudes must be finite");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > tol) {
    throw ValidationError("normalized", "sum |alpha_k|^2 = " + std::to_string(norm2));
  }
}

IncoherentState::IncoherentState(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("dimension", "incoherent state must have d >= 1");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < -tol) {
      throw ValidationError("nonnegative", "probability " + std::to_string(p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw ValidationError("normalized", "probabilities sum to " + std::to_string(total));
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, double tol)
    : mat_(m), spectrum_{{}, ComplexMatrix(1, 1)}, tol_(tol) {
  if (!m.is_square()) {
    throw ValidationError("square", std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double defect = hermiticity_defect(m);
  if (defect > tol * std::max(1.0, m.frobenius_norm())) {
    throw ValidationError("hermitian", "||rho - rho^dagger||_F = " + std::to_string(defect));
  }
  mat_ = 0.5 * (m + m.adjoint());
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw ValidationError("trace", "Tr(rho) = " + std::to_string(tr.real()));
  }
  spectrum_ = hermitian_eig(mat_, tol);
  const double lambda_min = spectrum_.eigenvalues.back();
  if (lambda_min < -tol) {
    throw ValidationError("positive-semidefinite",
                          "smallest eigenvalue " + std::to_string(lambda_min));
  }
}

DensityMatrix::DensityMatrix(const PureState& psi, double tol) : DensityMatrix(psi.projector(), tol) {}

DensityMatrix::DensityMatrix(const IncoherentState& p, double tol) : DensityMatrix(p.matrix(), tol) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  return DensityMatrix(IncoherentState(std::vector<double>(d, 1.0 / static_cast<double>(d))));
}

double DensityMatrix::purity() const {
  double sum = 0.0;
  for (double lambda : spectrum_.eigenvalues) sum += lambda * lambda;
  return sum;
}

Ensemble::Ensemble(std::vector<double> weights, std::vector<DensityMatrix> members, double tol)
    : weights_(std::move(weights)), members_(std::move(members)) {
  if (weights_.size() != members_.size() || members_.empty()) {
    throw DimensionMismatch("ensemble: need one weight per member and at least one member");
  }
  IncoherentState(weights_, tol);  // validates the weights as a distribution
  for (const auto& m : members_) {
    if (m.dim() != members_.front().dim()) {
      throw DimensionMismatch("ensemble: members have different dimensions");
    }
  }
}

DensityMatrix Ensemble::mixture() const {
  ComplexMatrix acc(members_.front().dim(), members_.front().dim());
  for (std::size_t n = 0; n < members_.size(); ++n) acc += weights_[n] * members_[n].matrix();
  return DensityMatrix(acc);
}

IncoherentState dephase(const DensityMatrix& rho) {
  std::vector<double> p(rho.dim());
  for (std::size_t k = 0; k < rho.dim(); ++k) p[k] = std::max(0.0, rho.matrix()(k, k).real());
  return IncoherentState(std::move(p), rho.tol());
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) h -= xlog2x(p);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lambda : rho.eigenvalues()) h -= xlog2x(clipped(lambda, rho.tol()));
  return std::max(0.0, h);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("relative_entropy: dimensions differ");
  const std::size_t d = rho.dim();

  double cross = 0.0;  // Tr(rho log2 sigma)
  const Spectrum& sig = sigma.spectrum();
  for (std::size_t k = 0; k < d; ++k) {
    // <v_k| rho |v_k>
    double weight = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
      Complex row = 0.0;
      for (std::size_t c = 0; c < d; ++c) row += rho.matrix()(r, c) * sig.eigenvectors(c, k);
      weight += (std::conj(sig.eigenvectors(r, k)) * row).real();
    }
    const double mu = sig.eigenvalues[k];
    if (mu <= tol) {
      if (weight > tol) return kInfiniteEntropy;
      continue;
    }
    cross += weight * std::log2(mu);
  }

  double self = 0.0;  // Tr(rho log2 rho)
  for (double lambda : rho.eigenvalues()) self += xlog2x(clipped(lambda, rho.tol()));
  return std::max(0.0, self - cross);
}

std::pair<DensityMatrix, DensityMatrix> reduced_states(const DensityMatrix& rho, std::size_t d_a,
                                                       std::size_t d_b) {
  return {DensityMatrix(partial_trace(rho.matrix(), d_a, d_b, Subsystem::A), rho.tol()),
          DensityMatrix(partial_trace(rho.matrix(), d_a, d_b, Subsystem::B), rho.tol())};
}

PureState pure_from_phases(std::span<const double> theta) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(theta.size()));
  std::vector<Complex> alpha(theta.size());
  std::transform(theta.begin(), theta.end(), alpha.begin(),
                 [amp](double t) { return std::polar(amp, t); });
  return PureState(std::move(alpha));
}

}  // namespace coherence_lab
