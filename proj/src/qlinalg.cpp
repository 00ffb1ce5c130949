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


#include "dqc1lab/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dqc1lab/errors.hpp"

namespace dqc1lab {

namespace {

constexpr double kEigenHermitianTolerance = 1e-10;
constexpr double kSupportTolerance = 1e-10;

void require_square(const ComplexMatrix &m, const char *what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": matrix must be square and nonempty");
  }
}

// Bit of `index` that belongs to `qubit` in an n-qubit register.
inline std::size_t bit_of(unsigned qubit, unsigned num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

void check_qubits(const std::set<unsigned> &qubits, unsigned num_qubits) {
  for (unsigned q : qubits) {
    if (q >= num_qubits) {
      throw InvalidArgument(
          "qubit index " + std::to_string(q) + " out of range for " +
          std::to_string(num_qubits) + " qubits");
    }
  }
}

}  // namespace

QubitRegister::QubitRegister(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw InvalidArgument("register needs at least one qubit");
  if ((std::size_t{1} << num_qubits) > kDefaultMaxDim) {
    throw DimensionError("register exceeds maximum dimension");
  }
}

QubitRegister QubitRegister::for_dimension(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
  }
  unsigned n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return QubitRegister(n);
}

double Spectrum::min() const {
  if (values.empty()) throw InvalidArgument("empty spectrum");
  return values.back();
}

double Spectrum::max() const {
  if (values.empty()) throw InvalidArgument("empty spectrum");
  return values.front();
}

double Spectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : matrix_(std::move(matrix)),
      register_(QubitRegister::for_dimension(static_cast<std::size_t>(matrix_.rows()))) {
  require_square(matrix_, "DensityMatrix");
  const double herm = max_abs(matrix_ - matrix_.adjoint());
  if (herm > kHermitianTolerance) {
    throw InvalidStateError("density matrix not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw InvalidStateError("density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lowest = hermitian_eigenvalues(matrix_).min();
  if (lowest < -kPsdTolerance) {
    throw InvalidStateError(
        "density matrix not positive semidefinite (min eigenvalue " +
        std::to_string(lowest) + ")");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(unsigned num_qubits) {
  const QubitRegister reg(num_qubits);
  return DensityMatrix(identity(reg.dim()) / static_cast<double>(reg.dim()));
}

DensityMatrix DensityMatrix::pure(const ComplexVector &v) {
  if (std::abs(v.norm() - 1.0) > kTraceTolerance) {
    throw InvalidArgument("pure state vector must be normalized");
  }
  return DensityMatrix(v * v.adjoint());
}

Bipartition::Bipartition(std::set<unsigned> transposed)
    : transposed_(std::move(transposed)) {
  if (transposed_.empty()) throw InvalidArgument("bipartition side must be nonempty");
}

void Bipartition::validate(unsigned num_qubits) const {
  check_qubits(transposed_, num_qubits);
  if (transposed_.size() >= num_qubits) {
    throw InvalidArgument("bipartition side must be a strict subset of the register");
  }
}

Bipartition Bipartition::complement(unsigned num_qubits) const {
  validate(num_qubits);
  std::set<unsigned> rest;
  for (unsigned q = 0; q < num_qubits; ++q) {
    if (!transposed_.contains(q)) rest.insert(q);
  }
  return Bipartition(std::move(rest));
}

std::vector<Bipartition> all_bipartitions(unsigned num_qubits) {
  if (num_qubits < 2) throw InvalidArgument("need at least two qubits for a cut");
  std::vector<Bipartition> cuts;
  // Fix the last qubit on the untransposed side to skip complements.
  const unsigned free_bits = num_qubits - 1;
  for (unsigned mask = 1; mask < (1u << free_bits); ++mask) {
    std::set<unsigned> side;
    for (unsigned q = 0; q < free_bits; ++q) {
      if (mask & (1u << (free_bits - 1 - q))) side.insert(q);
    }
    cuts.emplace_back(std::move(side));
  }
  return cuts;
}

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

double max_abs(const ComplexMatrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, double tolerance) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tolerance;
}

bool is_unitary(const ComplexMatrix &m, double tolerance) {
  return m.rows() == m.cols() &&
         max_abs(m.adjoint() * m - identity(static_cast<std::size_t>(m.rows()))) <= tolerance;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_dim) {
  require_square(a, "kron");
  require_square(b, "kron");
  const auto da = static_cast<std::size_t>(a.rows());
  const auto db = static_cast<std::size_t>(b.rows());
  if (da * db > max_dim) {
    throw DimensionError(
        "kron result dimension " + std::to_string(da * db) + " exceeds maximum " +
        std::to_string(max_dim));
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors, std::size_t max_dim) {
  ComplexMatrix out = identity(1);
  for (const auto &f : factors) out = kron(out, f, max_dim);
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix &m, unsigned k) {
  ComplexMatrix out = identity(1);
  for (unsigned i = 0; i < k; ++i) out = kron(out, m);
  return out;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix &op, unsigned qubit, unsigned num_qubits) {
  if (op.rows() != 2 || op.cols() != 2) throw DimensionError("single-qubit operator must be 2x2");
  if (qubit >= num_qubits) throw InvalidArgument("qubit index out of range");
  const ComplexMatrix left = identity(std::size_t{1} << qubit);
  const ComplexMatrix right = identity(std::size_t{1} << (num_qubits - 1 - qubit));
  return kron(kron(left, op), right);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix &m) {
  require_square(m, "hermitian_eigensystem");
  const double herm = max_abs(m - m.adjoint());
  if (herm > kEigenHermitianTolerance) {
    throw NotHermitianError("matrix not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigensolver did not converge");
  }
  // Eigen sorts ascending.
  const Eigen::Index n = sym.rows();
  Eigensystem out;
  out.spectrum.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.spectrum.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix &m) {
  require_square(m, "hermitian_eigenvalues");
  const double herm = max_abs(m - m.adjoint());
  if (herm > kEigenHermitianTolerance) {
    throw NotHermitianError("matrix not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigensolver did not converge");
  }
  Spectrum out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + sym.rows());
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, unsigned num_qubits, const Bipartition &cut) {
  require_square(m, "partial_transpose");
  if (static_cast<std::size_t>(m.rows()) != (std::size_t{1} << num_qubits)) {
    throw DimensionError("matrix dimension does not match register size");
  }
  cut.validate(num_qubits);
  std::size_t mask = 0;
  for (unsigned q : cut.transposed()) mask |= bit_of(q, num_qubits);

  const auto dim = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      // Exchange the transposed qubits' bits between row and column.
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, const Bipartition &cut) {
  return partial_transpose(rho.matrix(), rho.num_qubits(), cut);
}

ComplexMatrix partial_trace(const ComplexMatrix &m, unsigned num_qubits, const std::set<unsigned> &keep) {
  require_square(m, "partial_trace");
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set must be nonempty");
  check_qubits(keep, num_qubits);
  if (static_cast<std::size_t>(m.rows()) != (std::size_t{1} << num_qubits)) {
    throw DimensionError("matrix dimension does not match register size");
  }
  std::vector<std::size_t> kept_bits;
  std::vector<std::size_t> traced_bits;
  for (unsigned q = 0; q < num_qubits; ++q) {
    (keep.contains(q) ? kept_bits : traced_bits).push_back(bit_of(q, num_qubits));
  }
  auto scatter = [](std::size_t value, const std::vector<std::size_t> &bits) {
    std::size_t index = 0;
    const std::size_t k = bits.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (value & (std::size_t{1} << (k - 1 - i))) index |= bits[i];
    }
    return index;
  };

  const std::size_t dk = std::size_t{1} << kept_bits.size();
  const std::size_t dt = std::size_t{1} << traced_bits.size();
  std::vector<std::size_t> kept_index(dk), traced_index(dt);
  for (std::size_t i = 0; i < dk; ++i) kept_index[i] = scatter(i, kept_bits);
  for (std::size_t t = 0; t < dt; ++t) traced_index[t] = scatter(t, traced_bits);

  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = 0; c < dk; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        acc += m(static_cast<Eigen::Index>(kept_index[r] | traced_index[t]),
                 static_cast<Eigen::Index>(kept_index[c] | traced_index[t]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::set<unsigned> &keep) {
  return DensityMatrix(partial_trace(rho.matrix(), rho.num_qubits(), keep));
}

double trace_norm(const ComplexMatrix &m) {
  const Spectrum s = hermitian_eigenvalues(m);
  double acc = 0.0;
  for (double v : s.values) acc += std::abs(v);
  return acc;
}

double shannon_entropy(std::span<const double> probabilities) {
  double acc = 0.0;
  for (double p : probabilities) {
    if (p > kZeroEigenvalue) acc -= p * std::log2(p);
  }
  return acc;
}

double von_neumann_entropy(const DensityMatrix &rho) {
  const Spectrum s = hermitian_eigenvalues(rho.matrix());
  return shannon_entropy(s.values);
}

double relative_entropy(const DensityMatrix &x, const DensityMatrix &y) {
  if (x.dim() != y.dim()) throw DimensionError("relative_entropy: dimension mismatch");
  const Eigensystem ey = hermitian_eigensystem(y.matrix());
  double cross = 0.0;  // tr(x log2 y)
  for (std::size_t k = 0; k < ey.spectrum.size(); ++k) {
    const auto col = ey.vectors.col(static_cast<Eigen::Index>(k));
    const double weight = (col.adjoint() * x.matrix() * col)(0, 0).real();
    const double lambda = ey.spectrum.values[k];
    if (lambda > kZeroEigenvalue) {
      cross += weight * std::log2(lambda);
    } else if (weight > kSupportTolerance) {
      return std::numeric_limits<double>::infinity();
    }
  }
  const double value = -von_neumann_entropy(x) - cross;
  return std::max(value, 0.0);
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * identity(dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace dqc1lab
