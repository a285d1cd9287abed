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
#include <optional>
#include <span>
#include <vector>

#include "coherence_lab/coherence.hpp"
#include "coherence_lab/linalg.hpp"
#include "coherence_lab/states.hpp"

namespace coherence_lab {

/// Entries with |z| <= kNonzeroRelTol * ||K||_F count as zero.
inline constexpr double kNonzeroRelTol = 1e-10;
/// Kraus operators with ||K||_F below this are ignored by the structural tests.
inline constexpr double kZeroOperatorNorm = 1e-10;

/// Trace-preserving Kraus representation rho -> sum_n K_n rho K_n^dagger.
class KrausChannel {
 public:
  /// Throws ValidationError ("square", "dimension", "trace-preserving") when
  /// the operators are not d x d or sum_n K_n^dagger K_n differs from I by
  /// more than tol in Frobenius norm.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tol = kDefaultTol);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return kraus_.size(); }
  std::span<const ComplexMatrix> operators() const noexcept { return kraus_; }
  double tol() const noexcept { return tol_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_;
  double tol_;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// A column of a Kraus operator with more than one nonzero entry.
struct ColumnViolation {
  std::size_t kraus_index;
  std::size_t column;
  std::size_t nonzeros;
};

struct IncoherenceVerdict {
  bool incoherent = true;
  std::vector<ColumnViolation> violations;
};

/// Structural test: every Kraus operator has at most one nonzero per column.
IncoherenceVerdict is_incoherent(const KrausChannel& ch);

/// Definitional test: K_n |k><k| K_n^dagger is diagonal for every n and k.
bool is_incoherent_by_definition(const KrausChannel& ch, double tol = kNonzeroRelTol);

/// ||sum_n K_n K_n^dagger - I||_F <= tol (the channel's own tolerance by default).
bool is_unital(const KrausChannel& ch, std::optional<double> tol = std::nullopt);

/// The d maximally coherent states with DFT phases 2 pi (j-1)(k-1)/d whose
/// projectors sum to the identity.
std::vector<PureState> identity_mcs_decomposition(std::size_t d);

/// K = scale * D * Pi with D a diagonal unitary and Pi the permutation matrix
/// sending column j to row perm[j] (0-based).
struct PermScaledFactor {
  double scale = 0.0;
  std::vector<std::size_t> perm;
  std::vector<Complex> phases;  // diagonal of D, unimodular

  ComplexMatrix matrix() const;
};

/// Writes K as scale * D * Pi when every row and column holds exactly one
/// nonzero entry and all nonzero moduli agree within tol (relative).
std::optional<PermScaledFactor> factorize_perm_scaled(const ComplexMatrix& k, double tol = 1e-9);

struct PreservationWitness {
  std::vector<double> probe_phases;
  DensityMatrix input;
  DensityMatrix output;
  double coherence_drop = 0.0;  // c_re(input) - c_re(output)
};

struct ChannelClassification {
  bool incoherent = false;
  bool unital = false;
  bool preserves_mcs = false;
  IncoherenceVerdict incoherence;
  /// One factor per nonzero Kraus operator, when all of them factorize.
  std::optional<std::vector<PermScaledFactor>> factors;
  /// Present iff the channel is incoherent and does not preserve MCSs.
  std::optional<PreservationWitness> witness;
  std::size_t probes = 0;
  std::size_t probes_preserved = 0;
};

/// Decides whether an incoherent channel maps maximally coherent states to
/// maximally coherent states.
///
/// Structural route: incoherent, unital, every nonzero Kraus operator
/// factorizes as a_n D_n Pi_n, all Pi_n coincide and all D_n agree up to a
/// unimodular scalar (i.e. the channel is rho -> U rho U^dagger with U = D Pi).
/// Probe route: `samples` maximally coherent inputs (the uniform
/// superposition, then random phases drawn from `seed`) are pushed through
/// the channel and tested with is_mcs. The routes must agree; otherwise
/// ClassifierDisagreement is thrown. Channels that are not incoherent are
/// reported as non-preserving without probing.
ChannelClassification classify_mcs_preservation(const KrausChannel& ch, std::size_t samples = 50,
                                                std::uint64_t seed = 0,
                                                double mcs_tol = kDefaultMcsTol);

}  // namespace coherence_lab
