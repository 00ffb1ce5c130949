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


#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1lab/qlinalg.hpp"

namespace dqc1lab {

enum class Pauli { I, X, Y, Z };

/** A tensor product of Pauli operators, qubit 0 first. */
class PauliString {
 public:
  /** Parses letters from {I, X, Y, Z}, e.g. "YYX". */
  explicit PauliString(std::string_view letters);

  const std::vector<Pauli> &factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::string str() const;
  ComplexMatrix matrix() const;

 private:
  std::vector<Pauli> factors_;
};

/** III, ZZI, ZIZ, IZZ, XXX, YYX, YXY, XYY: the basis of GHZ-diagonal states. */
const std::array<PauliString, 8> &ghz_pauli_strings();

/** tr(ρ P). Throws DimensionError when P and ρ act on different registers. */
double pauli_expectation(const DensityMatrix &rho, const PauliString &p);

/**
 * ρ = (1/8) Σ λ_i P_i over ghz_pauli_strings(); lambda[0] is the identity
 * coefficient and equals 1 for a normalized state.
 */
struct GhzDiagonalCoefficients {
  std::array<double, 8> lambda{};

  /** 1-based access matching the λ1..λ8 labelling. */
  double operator()(int index) const { return lambda.at(static_cast<std::size_t>(index - 1)); }

  /**
   * λ5 λ6 λ7 λ8, the product that decides whether PPT suffices.
   * Coefficients within 1e-12 of zero count as exact zeros.
   */
  double kay_product() const;

  ComplexMatrix reconstruct() const;
};

/**
 * Stabilizer coefficients of a three-qubit GHZ-diagonal state. Throws
 * NotGhzDiagonalError (carrying the residual) when the coefficients do not
 * reproduce the input within 1e-10.
 */
GhzDiagonalCoefficients ghz_diagonal_coefficients(const DensityMatrix &rho);

enum class SeparabilityStatus { FullySeparable, NptEntangled, Inconclusive };

std::string_view to_string(SeparabilityStatus status);

struct NegativeEigenvalueWitness {
  Bipartition cut;
  double eigenvalue;
};

struct KayCertificate {
  GhzDiagonalCoefficients coefficients;
  double kay_product;
  /** Min PT eigenvalue when transposing qubit 0, 1 and 2. */
  std::array<double, 3> min_pt_eigenvalues;
};

struct ProductVectorCheck {
  ComplexVector vector;
  /** tr(ρ_q²) of each single-qubit marginal; all 1 for a product vector. */
  std::array<double, 3> local_purities;
};

struct DecompositionCertificate {
  double weight_omega;
  double weight_eta;
  double reconstruction_residual;
  KayCertificate omega;
  std::vector<ProductVectorCheck> eta_components;
};

struct SeparabilityVerdict {
  SeparabilityStatus status;
  std::optional<KayCertificate> kay;
  std::optional<DecompositionCertificate> decomposition;
  std::optional<NegativeEigenvalueWitness> witness;
};

/**
 * Full-separability test for three-qubit GHZ-diagonal states. A negative PT
 * eigenvalue gives NptEntangled; PPT under every cut with λ5λ6λ7λ8 <= 0 gives
 * FullySeparable; PPT with a positive product is Inconclusive.
 */
SeparabilityVerdict kay_criterion(const DensityMatrix &rho);

/**
 * rho3(α) = weight_omega · ω(α) + weight_eta · η with ω(α) GHZ-diagonal and
 * η = ½|+01><+01| + ½|+10><+10|.
 */
struct Rho3Decomposition {
  double weight_omega;
  DensityMatrix omega;
  double weight_eta;
  DensityMatrix eta;
};

Rho3Decomposition decompose_rho3(double alpha);

/** |+>|0>|1> and |+>|1>|0>. */
std::array<ComplexVector, 2> eta_product_vectors();

/**
 * Verdict on rho3(α): a PT witness when one exists, otherwise the
 * decomposition route (Kay on ω plus the product form of η).
 */
SeparabilityVerdict full_separability_verdict(double alpha);

}  // namespace dqc1lab
