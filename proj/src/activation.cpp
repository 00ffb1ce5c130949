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


#include "dqc1lab/activation.hpp"

#include <random>
#include <set>
#include <string>

#include "dqc1lab/errors.hpp"

namespace dqc1lab {

namespace {

constexpr unsigned kSystemQubits = 3;
constexpr unsigned kTotalQubits = 6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

AdversaryStrategy AdversaryStrategy::identity() {
  return AdversaryStrategy(
      Kind::Identity, {dqc1lab::identity(2), dqc1lab::identity(2), dqc1lab::identity(2)},
      std::nullopt);
}

AdversaryStrategy AdversaryStrategy::explicit_unitaries(std::array<ComplexMatrix, 3> unitaries) {
  for (const auto &u : unitaries) {
    if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-12)) {
      throw NotUnitaryError("adversary factors must be 2x2 unitaries");
    }
  }
  return AdversaryStrategy(Kind::Explicit, std::move(unitaries), std::nullopt);
}

AdversaryStrategy AdversaryStrategy::seeded_random(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::array<ComplexMatrix, 3> us;
  for (auto &u : us) u = random_unitary(2, rng);
  return AdversaryStrategy(Kind::SeededRandom, std::move(us), seed);
}

ComplexMatrix cnot(unsigned control, unsigned target, unsigned num_qubits) {
  if (control == target) throw InvalidArgument("cnot: control and target coincide");
  if (control >= num_qubits || target >= num_qubits) throw InvalidArgument("cnot: qubit out of range");
  const QubitRegister reg(num_qubits);
  const std::size_t control_bit = std::size_t{1} << (num_qubits - 1 - control);
  const std::size_t target_bit = std::size_t{1} << (num_qubits - 1 - target);
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(reg.dim()), static_cast<Eigen::Index>(reg.dim()));
  for (std::size_t b = 0; b < reg.dim(); ++b) {
    const std::size_t image = (b & control_bit) ? b ^ target_bit : b;
    out(static_cast<Eigen::Index>(image), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return out;
}

ActivationResult activate(
    const DensityMatrix &rho, const AdversaryStrategy &strategy, const AncillaPairing &pairing) {
  if (rho.num_qubits() != kSystemQubits) {
    throw DimensionError("activation expects a three-qubit system, got " + std::to_string(rho.num_qubits()));
  }
  const std::set<unsigned> ancillas(pairing.ancilla.begin(), pairing.ancilla.end());
  if (ancillas != std::set<unsigned>{3, 4, 5}) {
    throw InvalidArgument("ancilla pairing must be a permutation of qubits 3, 4, 5");
  }

  ComplexMatrix ancilla_state = ComplexMatrix::Zero(8, 8);
  ancilla_state(0, 0) = 1.0;
  DensityMatrix joint(kron(rho.matrix(), ancilla_state));

  const auto &us = strategy.unitaries();
  const ComplexMatrix local = kron(kron(kron(us[0], us[1]), us[2]), identity(8));
  joint = DensityMatrix(local * joint.matrix() * local.adjoint());

  ComplexMatrix copy = identity(std::size_t{1} << kTotalQubits);
  for (unsigned i = 0; i < kSystemQubits; ++i) copy = cnot(i, pairing.ancilla[i], kTotalQubits) * copy;
  joint = DensityMatrix(copy * joint.matrix() * copy.adjoint());

  const double value = trace_norm(partial_transpose(joint, Bipartition(ancillas)));
  return ActivationResult{value, strategy, std::nullopt};
}

ActivationResult activate(const Dqc1State &state, const AdversaryStrategy &strategy) {
  ActivationResult result = activate(state.state, strategy);
  result.alpha = state.alpha;
  return result;
}

std::uint64_t strategy_seed(std::uint64_t seed, unsigned index) {
  return splitmix64(seed ^ splitmix64(index));
}

std::vector<ActivationResult> activation_sweep(
    std::span<const double> alphas, unsigned random_strategies, std::uint64_t seed) {
  if (alphas.empty()) throw InvalidArgument("activation_sweep: empty alpha list");
  std::vector<AdversaryStrategy> strategies{AdversaryStrategy::identity()};
  for (unsigned k = 1; k <= random_strategies; ++k) {
    strategies.push_back(AdversaryStrategy::seeded_random(strategy_seed(seed, k)));
  }
  std::vector<ActivationResult> results;
  results.reserve(alphas.size() * strategies.size());
  for (double alpha : alphas) {
    const Dqc1State state = rho3(alpha);
    for (const auto &s : strategies) results.push_back(activate(state, s));
  }
  return results;
}

}  // namespace dqc1lab
