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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dqc1lab/dqc1.hpp"
#include "dqc1lab/qlinalg.hpp"

namespace dqc1lab {

/** Local unitaries an adversary applies to the three system qubits. */
class AdversaryStrategy {
 public:
  enum class Kind { Identity, Explicit, SeededRandom };

  static AdversaryStrategy identity();
  /** Throws NotUnitaryError unless every factor is a 2×2 unitary to 1e-12. */
  static AdversaryStrategy explicit_unitaries(std::array<ComplexMatrix, 3> unitaries);
  /** Three independent Haar-random qubit unitaries drawn from `seed`. */
  static AdversaryStrategy seeded_random(std::uint64_t seed);

  Kind kind() const { return kind_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  const std::array<ComplexMatrix, 3> &unitaries() const { return unitaries_; }

 private:
  AdversaryStrategy(Kind kind, std::array<ComplexMatrix, 3> unitaries, std::optional<std::uint64_t> seed)
      : kind_(kind), unitaries_(std::move(unitaries)), seed_(seed) {}

  Kind kind_;
  std::array<ComplexMatrix, 3> unitaries_;
  std::optional<std::uint64_t> seed_;
};

struct ActivationResult {
  double multiplicative_negativity;
  AdversaryStrategy strategy;
  /** Set when the input came from a Dqc1State. */
  std::optional<double> alpha;
};

/** Which ancilla qubit (of six) each system qubit 0, 1, 2 is paired with. */
struct AncillaPairing {
  std::array<unsigned, 3> ancilla = {3, 4, 5};
};

/** CNOT on `num_qubits` qubits, flipping `target` when `control` is |1>. */
ComplexMatrix cnot(unsigned control, unsigned target, unsigned num_qubits);

/**
 * Appends |000> ancillas, applies the strategy to the system qubits, then a
 * CNOT from each system qubit to its ancilla, and returns the trace norm of
 * the partial transpose over the ancillas.
 */
ActivationResult activate(
    const DensityMatrix &rho, const AdversaryStrategy &strategy,
    const AncillaPairing &pairing = {});

ActivationResult activate(const Dqc1State &state, const AdversaryStrategy &strategy);

/**
 * For each alpha, rho3(alpha) under the identity strategy followed by
 * `random_strategies` seeded random strategies. Results are alpha-major with
 * strategy index 0 the identity.
 */
std::vector<ActivationResult> activation_sweep(
    std::span<const double> alphas, unsigned random_strategies, std::uint64_t seed);

/** Seed of random strategy `index` (1-based) in a sweep seeded with `seed`. */
std::uint64_t strategy_seed(std::uint64_t seed, unsigned index);

}  // namespace dqc1lab
