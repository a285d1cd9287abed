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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace coherence_lab {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage and explicit dimensions.
///
/// Entries are always finite; constructing a matrix from data containing
/// NaN or Inf throws ValidationError.
class ComplexMatrix {
 public:
  /// rows x cols zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// True when every entry is finite.
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// ||a - a^dagger||_F
double hermiticity_defect(const ComplexMatrix& a);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Partial trace of an operator on C^{d_a} (x) C^{d_b}; composite basis index
/// of |i,j> is i*d_b + j. Throws DimensionMismatch if m is not
/// (d_a*d_b)-square.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b,
                            Subsystem keep);

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column k of `eigenvectors` belongs to eigenvalues[k].
/// Within a degenerate cluster the eigenvector order is unspecified.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(lambda) V^dagger
  ComplexMatrix reconstruct() const;
};

inline constexpr double kEigOffDiagonalRelTol = 1e-12;
inline constexpr int kEigMaxSweeps = 100;

/// Cyclic complex Jacobi eigensolver.
///
/// Requires ||a - a^dagger||_F <= tol * max(1, ||a||_F) (else NotHermitian).
/// The Hermitian part of `a` is diagonalised until the off-diagonal Frobenius
/// norm drops below 1e-12 * ||a||_F; NoConvergence after 100 sweeps.
Spectrum hermitian_eig(const ComplexMatrix& a, double tol = 1e-9);

}  // namespace coherence_lab
