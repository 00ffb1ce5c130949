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

#include <complex>
#include <cstddef>
#include <random>
#include <set>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dqc1lab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/** Largest matrix dimension any constructor will produce. */
inline constexpr std::size_t kDefaultMaxDim = 4096;

/** Admission tolerances for DensityMatrix. */
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
/** Eigenvalues below this are exact zeros inside entropies. */
inline constexpr double kZeroEigenvalue = 1e-12;

/**
 * A register of qubits. Qubit 0 is the most significant tensor factor, so
 * qubit q is bit (num_qubits - 1 - q) of a basis-state index.
 */
class QubitRegister {
 public:
  explicit QubitRegister(unsigned num_qubits);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }

  /** Number of qubits of a 2^n-dimensional space; throws otherwise. */
  static QubitRegister for_dimension(std::size_t dim);

 private:
  unsigned num_qubits_;
};

/** Real eigenvalues in descending order. */
struct Spectrum {
  std::vector<double> values;

  double min() const;
  double max() const;
  double sum() const;
  std::size_t size() const { return values.size(); }
};

/** Eigenpairs; column k of `vectors` belongs to `spectrum.values[k]`. */
struct Eigensystem {
  Spectrum spectrum;
  ComplexMatrix vectors;
};

/**
 * A validated density matrix: Hermitian, unit trace and positive
 * semidefinite up to the admission tolerances above. Construction throws
 * InvalidStateError when any check fails.
 */
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix &matrix() const { return matrix_; }
  const QubitRegister &qubits() const { return register_; }
  unsigned num_qubits() const { return register_.num_qubits(); }
  std::size_t dim() const { return register_.dim(); }

  /** I / 2^n. */
  static DensityMatrix maximally_mixed(unsigned num_qubits);
  /** |v><v| for a normalized vector v. */
  static DensityMatrix pure(const ComplexVector &v);

 private:
  ComplexMatrix matrix_;
  QubitRegister register_;
};

/** A cut of the register, represented by the side that gets transposed. */
class Bipartition {
 public:
  explicit Bipartition(std::set<unsigned> transposed);

  const std::set<unsigned> &transposed() const { return transposed_; }

  /** Throws InvalidArgument unless the set is a nonempty strict subset. */
  void validate(unsigned num_qubits) const;

  Bipartition complement(unsigned num_qubits) const;

  bool operator==(const Bipartition &) const = default;

 private:
  std::set<unsigned> transposed_;
};

/** Every cut of an n-qubit register up to complement (2^(n-1) - 1 cuts). */
std::vector<Bipartition> all_bipartitions(unsigned num_qubits);

ComplexMatrix identity(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

double max_abs(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double tolerance);
bool is_unitary(const ComplexMatrix &m, double tolerance);

/**
 * Kronecker product, (a ⊗ b)(i·db + k, j·db + l) = a(i,j)·b(k,l).
 * Throws DimensionError when the result would exceed `max_dim`.
 */
ComplexMatrix kron(
    const ComplexMatrix &a, const ComplexMatrix &b,
    std::size_t max_dim = kDefaultMaxDim);

/** Left-to-right Kronecker product of all factors. */
ComplexMatrix kron_all(
    std::span<const ComplexMatrix> factors,
    std::size_t max_dim = kDefaultMaxDim);

/** m^{⊗k}; the 1×1 identity for k = 0. */
ComplexMatrix kron_power(const ComplexMatrix &m, unsigned k);

/** A single-qubit operator acting on `qubit` of an n-qubit register. */
ComplexMatrix embed_single_qubit(
    const ComplexMatrix &op, unsigned qubit, unsigned num_qubits);

Spectrum hermitian_eigenvalues(const ComplexMatrix &m);
Eigensystem hermitian_eigensystem(const ComplexMatrix &m);

ComplexMatrix partial_transpose(
    const ComplexMatrix &m, unsigned num_qubits, const Bipartition &cut);
ComplexMatrix partial_transpose(const DensityMatrix &rho, const Bipartition &cut);

/**
 * Reduced operator on the qubits in `keep`, which retain their relative
 * order. Throws InvalidArgument on an empty or out-of-range set.
 */
ComplexMatrix partial_trace(
    const ComplexMatrix &m, unsigned num_qubits, const std::set<unsigned> &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const std::set<unsigned> &keep);

/** Sum of absolute eigenvalues of a Hermitian matrix. */
double trace_norm(const ComplexMatrix &m);

/** -Σ p log2 p over entries above kZeroEigenvalue. */
double shannon_entropy(std::span<const double> probabilities);

/** Von Neumann entropy in bits. */
double von_neumann_entropy(const DensityMatrix &rho);

/**
 * S(x‖y) = tr(x log2 x) - tr(x log2 y) in bits. Returns +infinity when the
 * support of x is not contained in the support of y.
 */
double relative_entropy(const DensityMatrix &x, const DensityMatrix &y);

/** Haar-distributed unitary via QR of a complex Gaussian matrix. */
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng);

}  // namespace dqc1lab
