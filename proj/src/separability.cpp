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


#include "dqc1lab/separability.hpp"

#include <algorithm>
#include <cmath>

#include "dqc1lab/correlations.hpp"
#include "dqc1lab/dqc1.hpp"
#include "dqc1lab/errors.hpp"

namespace dqc1lab {

namespace {

constexpr double kGhzResidualTolerance = 1e-10;
constexpr double kDecompositionTolerance = 1e-12;
constexpr double kPurityTolerance = 1e-12;

ComplexMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I:
      return identity(2);
    case Pauli::X:
      return pauli_x();
    case Pauli::Y:
      return pauli_y();
    case Pauli::Z:
      return pauli_z();
  }
  throw InvalidArgument("unknown Pauli");
}

const std::array<Bipartition, 3> &single_qubit_cuts() {
  static const std::array<Bipartition, 3> cuts = {
      Bipartition({0}), Bipartition({1}), Bipartition({2})};
  return cuts;
}

ComplexVector basis_ket(int bit) {
  ComplexVector v = ComplexVector::Zero(2);
  v(bit) = 1.0;
  return v;
}

ComplexVector kron_vec(const ComplexVector &a, const ComplexVector &b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ProductVectorCheck check_product(const ComplexVector &v) {
  const DensityMatrix rho = DensityMatrix::pure(v);
  ProductVectorCheck check{v, {}};
  for (unsigned q = 0; q < 3; ++q) {
    const ComplexMatrix local = partial_trace(rho, {q}).matrix();
    check.local_purities[q] = (local * local).trace().real();
  }
  return check;
}

}  // namespace

PauliString::PauliString(std::string_view letters) {
  if (letters.empty()) throw InvalidArgument("empty Pauli string");
  for (char c : letters) {
    switch (c) {
      case 'I':
        factors_.push_back(Pauli::I);
        break;
      case 'X':
        factors_.push_back(Pauli::X);
        break;
      case 'Y':
        factors_.push_back(Pauli::Y);
        break;
      case 'Z':
        factors_.push_back(Pauli::Z);
        break;
      default:
        throw InvalidArgument(std::string("invalid Pauli letter '") + c + "'");
    }
  }
}

std::string PauliString::str() const {
  std::string out;
  for (Pauli p : factors_) out += "IXYZ"[static_cast<int>(p)];
  return out;
}

ComplexMatrix PauliString::matrix() const {
  ComplexMatrix out = identity(1);
  for (Pauli p : factors_) out = kron(out, pauli_matrix(p));
  return out;
}

const std::array<PauliString, 8> &ghz_pauli_strings() {
  static const std::array<PauliString, 8> strings = {
      PauliString("III"), PauliString("ZZI"), PauliString("ZIZ"), PauliString("IZZ"),
      PauliString("XXX"), PauliString("YYX"), PauliString("YXY"), PauliString("XYY")};
  return strings;
}

double pauli_expectation(const DensityMatrix &rho, const PauliString &p) {
  if (p.size() != rho.num_qubits()) {
    throw DimensionError(
        "Pauli string " + p.str() + " does not match a " + std::to_string(rho.num_qubits()) +
        "-qubit state");
  }
  return (rho.matrix() * p.matrix()).trace().real();
}

double GhzDiagonalCoefficients::kay_product() const {
  double product = 1.0;
  for (std::size_t i = 4; i < 8; ++i) {
    product *= std::abs(lambda[i]) <= 1e-12 ? 0.0 : lambda[i];
  }
  return product + 0.0;  // no negative zero
}

ComplexMatrix GhzDiagonalCoefficients::reconstruct() const {
  ComplexMatrix out = ComplexMatrix::Zero(8, 8);
  const auto &strings = ghz_pauli_strings();
  for (std::size_t i = 0; i < strings.size(); ++i) out += lambda[i] * strings[i].matrix();
  return out / 8.0;
}

GhzDiagonalCoefficients ghz_diagonal_coefficients(const DensityMatrix &rho) {
  if (rho.num_qubits() != 3) throw DimensionError("GHZ-diagonal coefficients need a three-qubit state");
  GhzDiagonalCoefficients coeffs;
  const auto &strings = ghz_pauli_strings();
  for (std::size_t i = 0; i < strings.size(); ++i) {
    coeffs.lambda[i] = pauli_expectation(rho, strings[i]);
  }
  const double residual = max_abs(coeffs.reconstruct() - rho.matrix());
  if (residual > kGhzResidualTolerance) {
    throw NotGhzDiagonalError(
        "state is not GHZ-diagonal (residual " + std::to_string(residual) + ")", residual);
  }
  return coeffs;
}

std::string_view to_string(SeparabilityStatus status) {
  switch (status) {
    case SeparabilityStatus::FullySeparable:
      return "FullySeparable";
    case SeparabilityStatus::NptEntangled:
      return "NptEntangled";
    case SeparabilityStatus::Inconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

SeparabilityVerdict kay_criterion(const DensityMatrix &rho) {
  const GhzDiagonalCoefficients coeffs = ghz_diagonal_coefficients(rho);
  KayCertificate cert{coeffs, coeffs.kay_product(), {}};
  std::optional<NegativeEigenvalueWitness> witness;
  const auto &cuts = single_qubit_cuts();
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    cert.min_pt_eigenvalues[k] = hermitian_eigenvalues(partial_transpose(rho, cuts[k])).min();
    if (cert.min_pt_eigenvalues[k] < -kPsdTolerance &&
        (!witness || cert.min_pt_eigenvalues[k] < witness->eigenvalue)) {
      witness = NegativeEigenvalueWitness{cuts[k], cert.min_pt_eigenvalues[k]};
    }
  }
  if (witness) {
    return SeparabilityVerdict{SeparabilityStatus::NptEntangled, cert, std::nullopt, witness};
  }
  const auto status = cert.kay_product <= 0.0 ? SeparabilityStatus::FullySeparable
                                              : SeparabilityStatus::Inconclusive;
  return SeparabilityVerdict{status, cert, std::nullopt, std::nullopt};
}

std::array<ComplexVector, 2> eta_product_vectors() {
  ComplexVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return {kron_vec(kron_vec(plus, basis_ket(0)), basis_ket(1)),
          kron_vec(kron_vec(plus, basis_ket(1)), basis_ket(0))};
}

Rho3Decomposition decompose_rho3(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in [0, 1]");
  ComplexMatrix omega = ComplexMatrix::Zero(8, 8);
  // Diagonal 1 where qubits 1 and 2 agree, 1 - α where they differ.
  for (int i = 0; i < 8; ++i) {
    const bool agree = ((i >> 1) & 1) == (i & 1);
    omega(i, i) = agree ? 1.0 : 1.0 - alpha;
  }
  omega(0, 7) = omega(7, 0) = alpha;
  omega(3, 4) = omega(4, 3) = alpha;
  omega /= 8.0 - 4.0 * alpha;

  ComplexMatrix eta = ComplexMatrix::Zero(8, 8);
  for (const ComplexVector &v : eta_product_vectors()) eta += 0.5 * v * v.adjoint();

  return Rho3Decomposition{
      1.0 - alpha / 2.0, DensityMatrix(std::move(omega)), alpha / 2.0, DensityMatrix(std::move(eta))};
}

SeparabilityVerdict full_separability_verdict(double alpha) {
  const DensityMatrix rho = rho3(alpha).state;

  std::optional<NegativeEigenvalueWitness> witness;
  for (const Bipartition &cut : single_qubit_cuts()) {
    const double lowest = min_pt_eigenvalue(rho, cut);
    // Prefer the earlier cut when two agree to rounding.
    if (lowest < -kPsdTolerance && (!witness || lowest < witness->eigenvalue - 1e-14)) {
      witness = NegativeEigenvalueWitness{cut, lowest};
    }
  }
  if (witness) {
    return SeparabilityVerdict{SeparabilityStatus::NptEntangled, std::nullopt, std::nullopt, witness};
  }

  const Rho3Decomposition parts = decompose_rho3(alpha);
  const ComplexMatrix rebuilt =
      parts.weight_omega * parts.omega.matrix() + parts.weight_eta * parts.eta.matrix();
  const SeparabilityVerdict omega_verdict = kay_criterion(parts.omega);

  DecompositionCertificate cert{
      parts.weight_omega, parts.weight_eta, max_abs(rebuilt - rho.matrix()), *omega_verdict.kay, {}};
  bool eta_separable = true;
  for (const ComplexVector &v : eta_product_vectors()) {
    cert.eta_components.push_back(check_product(v));
    for (double purity : cert.eta_components.back().local_purities) {
      eta_separable = eta_separable && std::abs(purity - 1.0) <= kPurityTolerance;
    }
  }

  const bool certified = omega_verdict.status == SeparabilityStatus::FullySeparable &&
                         eta_separable && cert.reconstruction_residual <= kDecompositionTolerance;
  return SeparabilityVerdict{
      certified ? SeparabilityStatus::FullySeparable : SeparabilityStatus::Inconclusive,
      std::nullopt, cert, std::nullopt};
}

}  // namespace dqc1lab
