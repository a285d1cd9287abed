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

// Independent reference computations used by the tests. Nothing here calls
// the library's numerical routines; eigenvalues come from Eigen.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "coherence_lab/linalg.hpp"

namespace oracle {

using cd = std::complex<double>;

inline Eigen::MatrixXcd to_eigen(const coherence_lab::ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

inline coherence_lab::ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  coherence_lab::ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

/// Eigenvalues in descending order.
inline std::vector<double> eigenvalues(const coherence_lab::ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline double entropy_of(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 1e-300) h -= x * std::log(x) / std::log(2.0);
  }
  return h;
}

inline double von_neumann(const coherence_lab::ComplexMatrix& rho) {
  auto ev = eigenvalues(rho);
  for (auto& x : ev) x = std::max(0.0, x);
  return entropy_of(ev);
}

/// S(diag) - S(rho), both from Eigen.
inline double coherence_re(const coherence_lab::ComplexMatrix& rho) {
  std::vector<double> diag(rho.rows());
  for (std::size_t k = 0; k < rho.rows(); ++k) diag[k] = rho(k, k).real();
  return entropy_of(diag) - von_neumann(rho);
}

/// Eigenvalues of the 2x2 Hermitian [[a, b], [conj b, c]] from the quadratic.
inline std::pair<double, double> eig2(double a, cd b, double c) {
  const double mean = 0.5 * (a + c);
  const double radius = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  return {mean + radius, mean - radius};
}

/// Kronecker product by the defining index formula.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

}  // namespace oracle
