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

#include "coherence_lab/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coherence_lab/errors.hpp"
#include "coherence_lab/sampling.hpp"

namespace coherence_lab {

namespace {

bool is_zero_operator(const ComplexMatrix& k) { return k.frobenius_norm() <= kZeroOperatorNorm; }

std::vector<std::size_t> nonzero_rows(const ComplexMatrix& k, std::size_t column) {
  const double eps = kNonzeroRelTol * k.frobenius_norm();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    if (std::abs(k(r, column)) > eps) rows.push_back(r);
  }
  return rows;
}

// D_n = c D_0 for a unimodular c.
bool proportional_phases(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  const Complex c = b.front() / a.front();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(b[k] - c * a[k]) > tol) return false;
  }
  return true;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tol)
    : kraus_(std::move(kraus)), dim_(0), tol_(tol) {
  if (kraus_.empty()) throw ValidationError("nonempty", "a channel needs at least one Kraus operator");
  dim_ = kraus_.front().rows();
  for (const auto& k : kraus_) {
    if (!k.is_square()) throw ValidationError("square", "Kraus operators must be square");
    if (k.rows() != dim_) throw ValidationError("dimension", "Kraus operators differ in dimension");
  }
  ComplexMatrix completeness(dim_, dim_);
  for (const auto& k : kraus_) completeness += k.adjoint() * k;
  const double defect = frobenius_distance(completeness, ComplexMatrix::identity(dim_));
  if (defect > tol) {
    throw ValidationError("trace-preserving",
                          "||sum K^dagger K - I||_F = " + std::to_string(defect));
  }
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    throw DimensionMismatch("apply: channel dimension " + std::to_string(ch.dim()) +
                            " vs state dimension " + std::to_string(rho.dim()));
  }
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& k : ch.operators()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(out, std::max(rho.tol(), ch.tol()));
}

IncoherenceVerdict is_incoherent(const KrausChannel& ch) {
  IncoherenceVerdict verdict;
  for (std::size_t n = 0; n < ch.size(); ++n) {
    const ComplexMatrix& k = ch.operators()[n];
    if (is_zero_operator(k)) continue;
    for (std::size_t c = 0; c < ch.dim(); ++c) {
      const auto rows = nonzero_rows(k, c);
      if (rows.size() > 1) verdict.violations.push_back({n, c, rows.size()});
    }
  }
  verdict.incoherent = verdict.violations.empty();
  return verdict;
}

bool is_incoherent_by_definition(const KrausChannel& ch, double tol) {
  const std::size_t d = ch.dim();
  for (const auto& k : ch.operators()) {
    for (std::size_t basis = 0; basis < d; ++basis) {
      std::vector<double> e(d, 0.0);
      e[basis] = 1.0;
      const ComplexMatrix projector = ComplexMatrix::diagonal(std::span<const double>(e));
      const ComplexMatrix out = k * projector * k.adjoint();
      const double weight = out.trace().real();
      if (weight <= kZeroOperatorNorm * kZeroOperatorNorm) continue;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          if (r != c && std::abs(out(r, c)) / weight > tol) return false;
        }
      }
    }
  }
  return true;
}

bool is_unital(const KrausChannel& ch, std::optional<double> tol) {
  ComplexMatrix sum(ch.dim(), ch.dim());
  for (const auto& k : ch.operators()) sum += k * k.adjoint();
  return frobenius_distance(sum, ComplexMatrix::identity(ch.dim())) <= tol.value_or(ch.tol());
}

std::vector<PureState> identity_mcs_decomposition(std::size_t d) {
  if (d == 0) throw OutOfRange("identity_mcs_decomposition: d must be positive");
  std::vector<PureState> states;
  states.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> alpha(d);
    for (std::size_t k = 0; k < d; ++k) {
      alpha[k] = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d);
    }
    states.push_back(pure_from_phases(alpha));
  }
  return states;
}

ComplexMatrix PermScaledFactor::matrix() const {
  ComplexMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = scale * phases[perm[j]];
  return m;
}

std::optional<PermScaledFactor> factorize_perm_scaled(const ComplexMatrix& k, double tol) {
  if (!k.is_square() || is_zero_operator(k)) return std::nullopt;
  const std::size_t d = k.rows();
  PermScaledFactor f;
  f.perm.resize(d);
  std::vector<bool> row_used(d, false);
  double modulus_sum = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const auto rows = nonzero_rows(k, c);
    if (rows.size() != 1 || row_used[rows.front()]) return std::nullopt;
    row_used[rows.front()] = true;
    f.perm[c] = rows.front();
    modulus_sum += std::abs(k(rows.front(), c));
  }
  f.scale = modulus_sum / static_cast<double>(d);
  f.phases.resize(d);
  for (std::size_t c = 0; c < d; ++c) {
    const Complex z = k(f.perm[c], c);
    if (std::abs(std::abs(z) - f.scale) > tol * f.scale) return std::nullopt;
    f.phases[f.perm[c]] = z / std::abs(z);
  }
  if (frobenius_distance(f.matrix(), k) > tol * std::max(1.0, k.frobenius_norm())) return std::nullopt;
  return f;
}

ChannelClassification classify_mcs_preservation(const KrausChannel& ch, std::size_t samples,
                                                std::uint64_t seed, double mcs_tol) {
  ChannelClassification out;
  out.incoherence = is_incoherent(ch);
  out.incoherent = out.incoherence.incoherent;
  out.unital = is_unital(ch);
  if (!out.incoherent) return out;
  if (samples == 0) throw OutOfRange("classify_mcs_preservation: need at least one probe");

  std::vector<PermScaledFactor> factors;
  bool all_factor = true;
  for (const auto& k : ch.operators()) {
    if (is_zero_operator(k)) continue;
    auto f = factorize_perm_scaled(k);
    if (!f) {
      all_factor = false;
      break;
    }
    factors.push_back(std::move(*f));
  }
  bool single_effective_term = all_factor && !factors.empty();
  if (single_effective_term) {
    for (const auto& f : factors) {
      if (f.perm != factors.front().perm ||
          !proportional_phases(factors.front().phases, f.phases, 1e-9)) {
        single_effective_term = false;
        break;
      }
    }
    out.factors = std::move(factors);
  }
  const bool structural = out.unital && single_effective_term;

  const std::size_t d = ch.dim();
  const double max_coherence = std::log2(static_cast<double>(d));
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> theta = s == 0 ? std::vector<double>(d, 0.0) : random_phases(d, rng);
    DensityMatrix input = make_mcs(theta, d);
    DensityMatrix output = apply(ch, input);
    const CoherenceReport report = is_mcs(output, mcs_tol);
    ++out.probes;
    if (report.is_mcs) {
      ++out.probes_preserved;
      continue;
    }
    const double drop = max_coherence - report.value;
    if (!out.witness || drop > out.witness->coherence_drop) {
      out.witness = PreservationWitness{std::move(theta), std::move(input), std::move(output), drop};
    }
  }

  const bool probes_say_preserving = out.probes_preserved == out.probes;
  if (structural != probes_say_preserving) {
    throw ClassifierDisagreement(
        "structural verdict " + std::string(structural ? "preserving" : "non-preserving") +
        " but " + std::to_string(out.probes_preserved) + "/" + std::to_string(out.probes) +
        " probes stayed maximally coherent");
  }
  out.preserves_mcs = structural;
  return out;
}

}  // namespace coherence_lab
