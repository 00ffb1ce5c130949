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

#include <cstdint>

#include "dqc1lab/qlinalg.hpp"

namespace dqc1lab {

/** Largest register size build_un accepts by default. */
inline constexpr unsigned kDefaultMaxRegisterQubits = 5;

/**
 * The four 2×2 blocks of the two-qubit unitary U_2 = [[A1, C1], [D1, B1]].
 * U_n extends it to n register qubits as
 *   [[I ⊗ A1, X^{⊗(n-2)} ⊗ C1], [X^{⊗(n-2)} ⊗ D1, I ⊗ B1]].
 */
struct UnitaryBlockSpec {
  ComplexMatrix a1;
  ComplexMatrix b1;
  ComplexMatrix c1;
  ComplexMatrix d1;

  /** Throws NotUnitaryError unless the blocks make U_2 unitary. */
  void validate(double tolerance = 1e-12) const;

  /**
   * The block choice whose U_2 swaps |00> and |11> and fixes |01>, |10>:
   * A1 = |1><1|, B1 = |0><0|, C1 = |0><1|, D1 = |1><0|.
   */
  static UnitaryBlockSpec corner_swap();
};

ComplexMatrix build_un(
    const UnitaryBlockSpec &spec, unsigned n,
    unsigned max_n = kDefaultMaxRegisterQubits);

/**
 * Output of the one-clean-qubit circuit: the special qubit (qubit 0) with
 * polarization alpha, controlling `unitary` on an n-qubit maximally mixed
 * register.
 */
struct Dqc1State {
  double alpha;
  unsigned n;
  ComplexMatrix unitary;
  DensityMatrix state;
};

/**
 * ρ = (1/2^{n+1}) [[I, α U†], [α U, I]]. Throws NotUnitaryError when `u` is
 * not unitary and InvalidArgument when alpha is outside [0, 1].
 */
Dqc1State build_dqc1_state(const ComplexMatrix &u, double alpha);

/**
 * The three-qubit output for the corner-swap blocks: 1/8 on the diagonal and
 * α/8 coupling |000>-|111>, |001>-|101>, |010>-|110>, |011>-|100>.
 */
Dqc1State rho3(double alpha);

/** (<X>, <Y>) of the special qubit. */
struct PauliXY {
  double x;
  double y;
};

/** Equals (α Re tr U / 2^n, α Im tr U / 2^n). */
PauliXY expectation_xy(const Dqc1State &s);

struct TraceEstimate {
  double exact_re;
  double exact_im;
  double sampled_re;
  double sampled_im;
  std::uint64_t shots;
  double std_error_re;
  double std_error_im;
  std::uint64_t seed;
};

/**
 * Simulates `shots` ±1 outcomes of an X measurement and of a Y measurement
 * of the special qubit, seeded deterministically.
 */
TraceEstimate sample_trace_estimate(const Dqc1State &s, std::uint64_t shots, std::uint64_t seed);

}  // namespace dqc1lab
