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
#include <cstddef>
#include <set>

#include "dqc1lab/qlinalg.hpp"

namespace dqc1lab {

/**
 * The cut of the three-qubit output that transposes the last register
 * qubit (qubit 2). Transposing qubit 1 gives the same spectrum; transposing
 * the special qubit leaves that state unchanged.
 */
Bipartition rho3_entangling_cut();

/** ‖ρ^{T_cut}‖₁ - 1, i.e. twice the magnitude of the negative PT eigenvalues. */
double negativity(const DensityMatrix &rho, const Bipartition &cut);

/** 1 + negativity; exactly 1 for states with a positive partial transpose. */
double multiplicative_negativity(const DensityMatrix &rho, const Bipartition &cut);

/** Smallest eigenvalue of the partial transpose. */
double min_pt_eigenvalue(const DensityMatrix &rho, const Bipartition &cut);

/** PPT up to the admission tolerance (min PT eigenvalue >= -1e-10). */
bool is_ppt(const DensityMatrix &rho, const Bipartition &cut);

/** S(A) + S(B) - S(AB) in bits, B being the complement of `part_a`. */
double mutual_information(const DensityMatrix &rho, const std::set<unsigned> &part_a);

/**
 * A rank-1 projective qubit measurement {|v><v|, I - |v><v|} with
 * |v> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>.
 */
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  ComplexVector ket() const;
  std::array<ComplexMatrix, 2> projectors() const;
  /** Bloch vector of the first projector. */
  std::array<double, 3> bloch() const;
};

/**
 * Σ_k p_k S(ρ_k) for the post-measurement states ρ_k after measuring
 * `measured_qubit` in `basis`. Outcomes with p_k < 1e-12 are dropped.
 */
double conditional_entropy(
    const DensityMatrix &rho, unsigned measured_qubit, const MeasurementBasis &basis);

/** Grid-plus-refinement settings for the classical correlation search. */
struct MeasurementSearchOptions {
  unsigned theta_points = 64;
  unsigned phi_points = 128;
  unsigned starts = 5;
  double objective_tolerance = 1e-7;
};

struct ClassicalCorrelation {
  /** Value attained by `basis`; a lower bound on the supremum. */
  double value;
  MeasurementBasis basis;
};

/**
 * sup over projective measurements on `measured_qubit` of
 * S(rest) - S(ρ | {B_k}). Deterministic; ties prefer the smallest (θ, φ).
 */
ClassicalCorrelation classical_correlation(
    const DensityMatrix &rho, unsigned measured_qubit,
    const MeasurementSearchOptions &options = {});

struct UpperBoundOptions {
  /** Stop once the bound is within this of the best attained value. */
  double tolerance = 1e-6;
  std::size_t max_cells = 400000;
};

struct ClassicalCorrelationBound {
  double upper;
  double best_attained;
  std::size_t cells_evaluated;
  bool converged;
};

/**
 * Rigorous upper bound on the classical correlation, by branch and bound
 * over cells of the Bloch hemisphere. Each cell is bounded from its centre
 * by the smaller of a first-order (gradient bound times radius) and a
 * second-order (exact gradient plus curvature bound) estimate. Cells where a
 * conditional state may become singular fall back to min(S(rest), 1), so
 * rank-deficient inputs, and objectives that are flat over the sphere, can
 * exhaust max_cells with converged = false. `upper` is valid either way.
 */
ClassicalCorrelationBound classical_correlation_upper_bound(
    const DensityMatrix &rho, unsigned measured_qubit,
    const UpperBoundOptions &options = {});

struct DiscordOptions {
  MeasurementSearchOptions search;
  bool certify = true;
  UpperBoundOptions bound;
};

struct DiscordResult {
  double mutual_information;
  double classical_correlation;
  /** mutual_information - classical_correlation, clamped at 0. */
  double discord;
  MeasurementBasis optimal_basis;
  /** max(0, I - C_upper); 0 when certification is disabled. */
  double certified_lower_bound;
};

DiscordResult discord(
    const DensityMatrix &rho, unsigned measured_qubit, const DiscordOptions &options = {});

}  // namespace dqc1lab
