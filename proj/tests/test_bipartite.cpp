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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coherence_lab/bipartite.hpp"
#include "coherence_lab/coherence.hpp"
#include "coherence_lab/errors.hpp"
#include "coherence_lab/sampling.hpp"
#include "support/oracles.hpp"

using namespace coherence_lab;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix plus_plus() {
  return DensityMatrix(kron(make_mcs(std::vector<double>{0, 0}, 2).matrix(),
                            make_mcs(std::vector<double>{0, 0}, 2).matrix()));
}

DensityMatrix bell() {
  const double h = 1.0 / std::sqrt(2.0);
  return DensityMatrix(PureState({h, 0.0, 0.0, h}));
}

// (|1> + e^{3i theta}|2>)/sqrt2 (x) (|1> + e^{i theta}|2> + e^{2i theta}|3>)/sqrt3,
// built without the library.
Eigen::MatrixXcd ramp_product_oracle(double theta) {
  Eigen::VectorXcd a(2);
  a << 1.0, std::polar(1.0, 3 * theta);
  a /= std::sqrt(2.0);
  Eigen::VectorXcd b(3);
  b << 1.0, std::polar(1.0, theta), std::polar(1.0, 2 * theta);
  b /= std::sqrt(3.0);
  return oracle::kron(a * a.adjoint(), b * b.adjoint());
}

}  // namespace

TEST_CASE("superadditivity_report examples") {
  SUBCASE("product of qubit MCSs") {
    const auto r = superadditivity_report(plus_plus(), 2, 2);
    CHECK(r.c_ab == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.c_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.c_b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.gap) < 1e-12);
    CHECK(r.equality);
    CHECK(r.is_product);
  }
  SUBCASE("Bell state") {
    const auto r = superadditivity_report(bell(), 2, 2);
    CHECK(r.c_ab == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.c_a) < 1e-12);
    CHECK(std::abs(r.c_b) < 1e-12);
    CHECK(r.gap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(r.equality);
    CHECK_FALSE(r.is_product);
    // rho_A (x) rho_B = I/4 here.
    const Eigen::MatrixXcd diff = oracle::to_eigen(bell().matrix()) - Eigen::MatrixXcd::Identity(4, 4) / 4.0;
    CHECK(r.product_distance == doctest::Approx(diff.norm()).epsilon(1e-12));
  }
  SUBCASE("2x3 phase ramp at theta = pi/3 has zero gap and is a product state") {
    const auto r = superadditivity_report(counterexample_23(kPi / 3).rho, 2, 3);
    CHECK(std::abs(r.gap) <= 1e-9);
    CHECK(r.equality);
    CHECK(r.is_product);
    CHECK(r.product_distance < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(superadditivity_report(bell(), 3, 2), DimensionMismatch);
  }
}

TEST_CASE("super-additivity holds on sampled bipartite states") {
  Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d_a = 2 + trial % 2;
    const std::size_t d_b = 2 + (trial / 2) % 2;
    const DensityMatrix rho = random_density(d_a * d_b, rng, 1 + trial % (d_a * d_b));
    const auto r = superadditivity_report(rho, d_a, d_b);
    CHECK(r.gap >= -1e-9);
    CHECK(r.is_product == (r.product_distance <= kBipartiteTol));
  }
}

TEST_CASE("phase_separability_defect") {
  CHECK(phase_separability_defect(PhaseMatrix(2, 2, {0.1, 0.5, 1.1, 1.5})) < 1e-15);
  CHECK(phase_separability_defect(PhaseMatrix(2, 2, {0, 0, 0, kPi})) == doctest::Approx(kPi));
  // Separable modulo 2pi only.
  CHECK(phase_separability_defect(PhaseMatrix(2, 2, {0.0, 1.0, 2.0, 3.0 + 2 * kPi})) < 1e-12);
}

TEST_CASE("result2_check examples") {
  SUBCASE("separable phases") {
    const std::vector<double> a{0.3, 1.7, -2.2};
    const std::vector<double> b{0.9, 0.1, 4.0};
    std::vector<double> theta;
    for (double x : a) {
      for (double y : b) theta.push_back(x + y);
    }
    const auto v = result2_check(PhaseMatrix(3, 3, theta));
    CHECK(v.equality);
    CHECK(v.is_product);
    CHECK(v.phases_consistent);
  }
  SUBCASE("DFT phases d=3") {
    std::vector<double> theta;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) theta.push_back(2 * kPi * i * j / 3.0);
    }
    const auto v = result2_check(PhaseMatrix(3, 3, theta));
    CHECK_FALSE(v.equality);
    CHECK_FALSE(v.is_product);
    CHECK_FALSE(v.phases_consistent);
    // Reduced states are maximally mixed, so the full log2 9 is a gap.
    CHECK(v.report.gap == doctest::Approx(std::log2(9.0)).epsilon(1e-10));
  }
  SUBCASE("single phase flip d=2") {
    const auto v = result2_check(PhaseMatrix(2, 2, {0, 0, 0, kPi}));
    CHECK_FALSE(v.equality);
    CHECK_FALSE(v.is_product);
    CHECK_FALSE(v.phases_consistent);
    CHECK(v.all_agree());
    // The state is (|00> + |01> + |10> - |11>)/2, maximally entangled: gap = 2.
    CHECK(v.report.gap == doctest::Approx(2.0).epsilon(1e-10));
  }
  SUBCASE("non-square input") {
    CHECK_THROWS_AS(result2_check(PhaseMatrix(2, 3, std::vector<double>(6, 0.0))), NotSquare);
  }
}

TEST_CASE("reduced states of a phase table follow the row-sum formula") {
  Rng rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d_a = 2 + trial % 2;
    const std::size_t d_b = 2 + (trial / 2) % 3;
    const std::size_t d = d_a * d_b;
    const PhaseMatrix theta(d_a, d_b, random_phases(d, rng));
    const auto [rho_a, rho_b] = reduced_states(theta.density(), d_a, d_b);
    for (std::size_t i = 0; i < d_a; ++i) {
      for (std::size_t s = 0; s < d_a; ++s) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < d_b; ++j) sum += std::polar(1.0, theta(i, j) - theta(s, j));
        CHECK(std::abs(rho_a.matrix()(i, s) - sum / static_cast<double>(d)) <= 1e-12);
      }
    }
    for (std::size_t j = 0; j < d_b; ++j) {
      for (std::size_t t = 0; t < d_b; ++t) {
        Complex sum = 0.0;
        for (std::size_t i = 0; i < d_a; ++i) sum += std::polar(1.0, theta(i, j) - theta(i, t));
        CHECK(std::abs(rho_b.matrix()(j, t) - sum / static_cast<double>(d)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("counterexample_23 reproduces the displayed matrices") {
  for (double theta : {kPi / 3, kPi / 2, kPi, 1.0, 5.5}) {
    const auto [rho, report] = counterexample_23(theta);
    const auto [rho_a, rho_b] = reduced_states(rho, 2, 3);
    const ComplexMatrix displayed_a(2, 2, {0.5, 0.5 * std::polar(1.0, -3 * theta),
                                           0.5 * std::polar(1.0, 3 * theta), 0.5});
    CHECK(frobenius_distance(rho_a.matrix(), displayed_a) <= 1e-12);
    ComplexMatrix displayed_b(3, 3);
    for (int j = 0; j < 3; ++j) {
      for (int t = 0; t < 3; ++t) displayed_b(j, t) = std::polar(1.0 / 3.0, (j - t) * theta);
    }
    CHECK(frobenius_distance(rho_b.matrix(), displayed_b) <= 1e-12);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        CHECK(std::abs(rho.matrix()(r, c) - std::polar(1.0 / 6.0, (r - c) * theta)) <= 1e-15);
      }
    }
    CHECK(is_mcs(rho_a).is_mcs);
    CHECK(is_mcs(rho_b).is_mcs);
    CHECK(report.c_ab == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(report.c_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.c_b == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(std::abs(report.gap) <= 1e-9);
    // The state equals the tensor product of its two displayed factors.
    CHECK(frobenius_distance(rho.matrix(), oracle::from_eigen(ramp_product_oracle(theta))) <= 1e-12);
    CHECK(report.product_distance <= 1e-12);
  }
}

TEST_CASE("counterexample_23 range") {
  CHECK_THROWS_AS(counterexample_23(0.0), OutOfRange);
  CHECK_THROWS_AS(counterexample_23(2 * kPi), OutOfRange);
  CHECK_THROWS_AS(counterexample_23(-1.0), OutOfRange);
  CHECK_NOTHROW(counterexample_23(1e-3));
}

TEST_CASE("make_mcs_max_entangled") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const DensityMatrix rho = make_mcs_max_entangled(d);
    const CoherenceReport r = is_mcs(rho);
    CHECK(r.is_mcs);
    CHECK(std::abs(r.value - 2.0 * std::log2(static_cast<double>(d))) <= 1e-9);
    const auto [rho_a, rho_b] = reduced_states(rho, d, d);
    CHECK(frobenius_distance(rho_a.matrix(), DensityMatrix::maximally_mixed(d).matrix()) <= 1e-9);
    CHECK(frobenius_distance(rho_b.matrix(), DensityMatrix::maximally_mixed(d).matrix()) <= 1e-9);
  }
  SUBCASE("d = 2 phases") {
    const PhaseMatrix t = max_entangled_phases(2);
    CHECK(t(0, 0) == 0.0);
    CHECK(t(0, 1) == 0.0);
    CHECK(t(1, 0) == 0.0);
    CHECK(t(1, 1) == doctest::Approx(-kPi));
  }
  SUBCASE("d = 3 phases match the explicit solution mod 2pi") {
    const PhaseMatrix t = max_entangled_phases(3);
    const double expected[3][3] = {{0, 0, 0}, {0, -2 * kPi / 3, -4 * kPi / 3}, {0, -4 * kPi / 3, -2 * kPi / 3}};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(std::abs(wrap_phase(t(i, j) - expected[i][j])) < 1e-12);
    }
  }
  CHECK_THROWS_AS(make_mcs_max_entangled(1), OutOfRange);
}

TEST_CASE("phase matrix gauge") {
  const PhaseMatrix t(2, 2, {1.0, 2.0, -1.0, 7.0});
  const PhaseMatrix n = t.normalized();
  CHECK(n(0, 0) == 0.0);
  CHECK(n(0, 1) == doctest::Approx(1.0));
  CHECK(n(1, 0) == doctest::Approx(2 * kPi - 2.0));
  CHECK(n(1, 1) == doctest::Approx(6.0));
  // Normalisation changes only a global phase.
  CHECK(frobenius_distance(t.density().matrix(), n.density().matrix()) < 1e-14);
  CHECK_THROWS_AS(PhaseMatrix(2, 2, {1.0}), DimensionMismatch);
}
