// Copyright 2026 The dqc1-lab Authors
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


#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>

#include "dqc1lab/correlations.hpp"
#include "dqc1lab/dqc1.hpp"
#include "dqc1lab/errors.hpp"
#include "dqc1lab/separability.hpp"

using namespace dqc1lab;
using Catch::Matchers::WithinAbs;

namespace {

double omega_diagonal(unsigned index, double alpha) {
  const bool agree = ((index >> 1) & 1u) == (index & 1u);
  return (agree ? 1.0 : 1.0 - alpha) / (8.0 - 4.0 * alpha);
}

GhzDiagonalCoefficients coefficients(std::array<double, 8> lambda) {
  GhzDiagonalCoefficients c;
  c.lambda = lambda;
  return c;
}

}  // namespace

TEST_CASE("PauliString parsing and matrices") {
  const PauliString p("XYZ");
  CHECK(p.size() == 3);
  CHECK(p.str() == "XYZ");
  CHECK(p.matrix().isApprox(kron(pauli_x(), kron(pauli_y(), pauli_z()))));
  CHECK_THROWS_AS(PauliString("XQ"), InvalidArgument);
  CHECK_THROWS_AS(PauliString(""), InvalidArgument);
  for (const auto &s : ghz_pauli_strings()) {
    const ComplexMatrix m = s.matrix();
    CHECK(is_hermitian(m, 0.0));
    CHECK(is_unitary(m, 1e-15));
    if (s.str() != "III") CHECK(std::abs(m.trace()) == 0.0);
  }
  CHECK(ghz_pauli_strings()[4].str() == "XXX");
  CHECK(ghz_pauli_strings()[5].str() == "YYX");
}

TEST_CASE("pauli_expectation") {
  CHECK_THAT(pauli_expectation(rho3(0.4).state, PauliString("III")), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(pauli_expectation(rho3(0.4).state, PauliString("XX")), DimensionError);
  for (double alpha : {0.25, 0.5, 1.0}) {
    const DensityMatrix omega = decompose_rho3(alpha).omega;
    CHECK_THAT(pauli_expectation(omega, PauliString("XXX")), WithinAbs(alpha / (2 - alpha), 1e-12));
    CHECK_THAT(pauli_expectation(omega, PauliString("YYX")), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("ghz_diagonal_coefficients") {
  const auto mixed = ghz_diagonal_coefficients(DensityMatrix::maximally_mixed(3));
  CHECK(mixed(1) == 1.0);
  for (int i = 2; i <= 8; ++i) CHECK(mixed(i) == 0.0);

  const auto half = ghz_diagonal_coefficients(decompose_rho3(0.5).omega);
  CHECK_THAT(half(5), WithinAbs(1.0 / 3.0, 1e-12));
  CHECK_THAT(half(8), WithinAbs(-1.0 / 3.0, 1e-12));
  CHECK_THAT(half(6), WithinAbs(0.0, 1e-12));
  CHECK_THAT(half(7), WithinAbs(0.0, 1e-12));

  for (double alpha : {0.0, 0.3, 0.5, 0.8, 1.0}) {
    const auto l = ghz_diagonal_coefficients(decompose_rho3(alpha).omega);
    // Diagonal sign sums of the Z-type strings against the explicit omega diagonal.
    const std::array<std::pair<int, unsigned>, 3> z_strings{{{2, 0b110u}, {3, 0b101u}, {4, 0b011u}}};
    for (auto [index, mask] : z_strings) {
      double expected = 0.0;
      for (unsigned b = 0; b < 8; ++b) {
        expected += (std::popcount(b & mask) % 2 ? -1.0 : 1.0) * omega_diagonal(b, alpha);
      }
      CHECK_THAT(l(index), WithinAbs(expected, 1e-12));
    }
    CHECK_THAT(l(4), WithinAbs(alpha / (2 - alpha), 1e-12));
    CHECK_THAT(l(5) + l(8), WithinAbs(0.0, 1e-12));
    CHECK(l.kay_product() == 0.0);
    CHECK(max_abs(l.reconstruct() - decompose_rho3(alpha).omega.matrix()) <= 1e-12);
  }

  ComplexMatrix corner = ComplexMatrix::Zero(8, 8);
  corner(0, 0) = 1.0;
  try {
    ghz_diagonal_coefficients(DensityMatrix(corner));
    FAIL("expected NotGhzDiagonalError");
  } catch (const NotGhzDiagonalError &e) {
    CHECK(e.residual() > 0.1);
  }
  CHECK_THROWS_AS(ghz_diagonal_coefficients(DensityMatrix::maximally_mixed(2)), DimensionError);
}

TEST_CASE("kay_criterion") {
  for (double alpha : {0.0, 0.2, 0.5}) {
    const auto v = kay_criterion(decompose_rho3(alpha).omega);
    CHECK(v.status == SeparabilityStatus::FullySeparable);
    REQUIRE(v.kay.has_value());
    for (double m : v.kay->min_pt_eigenvalues) CHECK(m >= -1e-10);
  }
  const auto npt = kay_criterion(decompose_rho3(0.6).omega);
  CHECK(npt.status == SeparabilityStatus::NptEntangled);
  REQUIRE(npt.witness.has_value());
  // PT spectrum of omega over a register qubit is {(1-3l)/8 x2, (1+l)/8 x6} with l = a/(2-a).
  const double l = 0.6 / 1.4;
  CHECK_THAT(npt.witness->eigenvalue, WithinAbs((1 - 3 * l) / 8, 1e-12));

  CHECK(kay_criterion(DensityMatrix::maximally_mixed(3)).status == SeparabilityStatus::FullySeparable);

  const double c = 0.05;
  const auto positive = coefficients({1, 0, 0, 0, c, c, c, c});
  const auto inconclusive = kay_criterion(DensityMatrix(positive.reconstruct()));
  CHECK(inconclusive.status == SeparabilityStatus::Inconclusive);
  CHECK(inconclusive.kay->kay_product > 0.0);
}

TEST_CASE("omega is PPT under every cut exactly for alpha <= 1/2") {
  for (int i = 0; i <= 100; ++i) {
    const double alpha = i / 100.0;
    bool all_ppt = true;
    for (const auto &cut : all_bipartitions(3)) all_ppt = all_ppt && is_ppt(decompose_rho3(alpha).omega, cut);
    CHECK(all_ppt == (alpha <= 0.5));
  }
}

TEST_CASE("decompose_rho3") {
  const auto zero = decompose_rho3(0.0);
  CHECK(zero.weight_omega == 1.0);
  CHECK(zero.weight_eta == 0.0);
  CHECK(max_abs(zero.omega.matrix() - identity(8) / 8.0) <= 1e-15);

  const auto one = decompose_rho3(1.0);
  const double diagonal[] = {1, 0, 0, 1, 1, 0, 0, 1};
  for (int i = 0; i < 8; ++i) CHECK_THAT(one.omega.matrix()(i, i).real(), WithinAbs(diagonal[i] / 4, 1e-15));

  for (int i = 0; i <= 100; ++i) {
    const double alpha = i / 100.0;
    const auto d = decompose_rho3(alpha);
    CHECK_THAT(d.weight_omega + d.weight_eta, WithinAbs(1.0, 1e-15));
    const ComplexMatrix rebuilt = d.weight_omega * d.omega.matrix() + d.weight_eta * d.eta.matrix();
    CHECK(max_abs(rebuilt - rho3(alpha).state.matrix()) <= 1e-12);
  }
  CHECK_THROWS_AS(decompose_rho3(1.2), InvalidArgument);
}

TEST_CASE("eta is a mixture of product vectors") {
  for (const ComplexVector &v : eta_product_vectors()) {
    const DensityMatrix p = DensityMatrix::pure(v);
    for (unsigned q = 0; q < 3; ++q) {
      const ComplexMatrix m = partial_trace(p, {q}).matrix();
      CHECK_THAT((m * m).trace().real(), WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("full_separability_verdict") {
  const auto half = full_separability_verdict(0.5);
  CHECK(half.status == SeparabilityStatus::FullySeparable);
  REQUIRE(half.decomposition.has_value());
  CHECK(half.decomposition->reconstruction_residual <= 1e-12);
  CHECK(half.decomposition->eta_components.size() == 2);

  CHECK(full_separability_verdict(0.0).status == SeparabilityStatus::FullySeparable);

  const auto high = full_separability_verdict(0.9);
  CHECK(high.status == SeparabilityStatus::NptEntangled);
  REQUIRE(high.witness.has_value());
  CHECK_THAT(high.witness->eigenvalue, WithinAbs(-0.1, 1e-12));
  CHECK(high.witness->cut == Bipartition({1}));

  for (int i = 0; i <= 100; ++i) {
    const double alpha = i / 100.0;
    const auto expected = alpha <= 0.5 ? SeparabilityStatus::FullySeparable : SeparabilityStatus::NptEntangled;
    CHECK(full_separability_verdict(alpha).status == expected);
  }
  CHECK(to_string(SeparabilityStatus::Inconclusive) == "Inconclusive");
}
