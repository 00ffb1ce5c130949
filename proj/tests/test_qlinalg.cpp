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

#include <cmath>
#include <random>
#include <vector>

#include "dqc1lab/correlations.hpp"
#include "dqc1lab/dqc1.hpp"
#include "dqc1lab/errors.hpp"
#include "dqc1lab/qlinalg.hpp"
#include "oracles.hpp"

using namespace dqc1lab;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix diag(std::vector<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

void require_spectrum(const Spectrum &s, const std::vector<double> &expected, double tol) {
  REQUIRE(s.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK_THAT(s.values[i], WithinAbs(expected[i], tol));
}

}  // namespace

TEST_CASE("QubitRegister dimensions") {
  CHECK(QubitRegister(3).dim() == 8);
  CHECK(QubitRegister::for_dimension(64).num_qubits() == 6);
  CHECK_THROWS_AS(QubitRegister(0), InvalidArgument);
  CHECK_THROWS_AS(QubitRegister::for_dimension(6), DimensionError);
  CHECK_THROWS_AS(QubitRegister::for_dimension(1), DimensionError);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix(identity(4) / 4.0));
  SECTION("non-Hermitian") {
    ComplexMatrix m = identity(2) / 2.0;
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(m), InvalidStateError);
  }
  SECTION("wrong trace") { CHECK_THROWS_AS(DensityMatrix(identity(2)), InvalidStateError); }
  SECTION("negative eigenvalue") { CHECK_THROWS_AS(DensityMatrix(diag({1.5, -0.5})), InvalidStateError); }
  SECTION("tiny negative eigenvalue within tolerance") { CHECK_NOTHROW(DensityMatrix(diag({1.0 + 1e-11, -1e-11}))); }
  SECTION("dimension not a power of two") { CHECK_THROWS_AS(DensityMatrix(identity(3) / 3.0), DimensionError); }
  SECTION("pure state") {
    ComplexVector v(2);
    v << 1.0, 0.0;
    CHECK(DensityMatrix::pure(v).matrix()(0, 0) == Complex(1.0));
    v << 1.0, 1.0;
    CHECK_THROWS_AS(DensityMatrix::pure(v), InvalidArgument);
  }
}

TEST_CASE("Bipartition validation and enumeration") {
  CHECK_THROWS_AS(Bipartition({}), InvalidArgument);
  CHECK_THROWS_AS(Bipartition({0, 1, 2}).validate(3), InvalidArgument);
  CHECK_THROWS_AS(Bipartition({3}).validate(3), InvalidArgument);
  CHECK(Bipartition({0}).complement(3) == Bipartition({1, 2}));
  const auto cuts = all_bipartitions(3);
  REQUIRE(cuts.size() == 3);
  CHECK(cuts[0] == Bipartition({1}));
  CHECK(cuts[1] == Bipartition({0}));
  CHECK(cuts[2] == Bipartition({0, 1}));
}

TEST_CASE("kron") {
  CHECK(kron(identity(2), identity(2)).isApprox(identity(4)));
  CHECK(kron(pauli_z(), pauli_z()).isApprox(diag({1, -1, -1, 1})));
  const ComplexMatrix xu = kron(pauli_x(), build_un(UnitaryBlockSpec::corner_swap(), 2));
  REQUIRE(xu.rows() == 8);
  // Hand expansion: entry (1,8) in 1-based indexing is X(0,1) * U_2(0,3).
  CHECK(xu(0, 7) == Complex(1.0));
  CHECK(xu(7, 0) == Complex(1.0));
  CHECK(xu(0, 0) == Complex(0.0));
  CHECK_THROWS_AS(kron(identity(64), identity(128)), DimensionError);
  const std::vector<ComplexMatrix> factors{pauli_x(), pauli_y(), pauli_z()};
  CHECK(kron_all(factors).isApprox(kron(pauli_x(), kron(pauli_y(), pauli_z()))));
  CHECK(kron_power(pauli_x(), 0).isApprox(identity(1)));
  CHECK(embed_single_qubit(pauli_x(), 1, 3).isApprox(kron(identity(2), kron(pauli_x(), identity(2)))));
}

TEST_CASE("hermitian_eigenvalues on fixed inputs") {
  require_spectrum(hermitian_eigenvalues(pauli_z()), {1.0, -1.0}, 0.0);
  const auto pt = partial_transpose(rho3(1.0).state, rho3_entangling_cut());
  require_spectrum(hermitian_eigenvalues(pt), {3.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8, -1.0 / 8},
                   1e-12);
  ComplexMatrix not_hermitian = pauli_x();
  not_hermitian(0, 1) = 2.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(not_hermitian), NotHermitianError);
}

TEST_CASE("hermitian_eigenvalues against the characteristic-polynomial oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = oracle::random_hermitian(4, rng);
    const auto expected = oracle::charpoly_eigenvalues(m);
    require_spectrum(hermitian_eigenvalues(m), expected, 1e-8);
  }
}

TEST_CASE("hermitian_eigensystem reconstructs its input") {
  std::mt19937_64 rng(3);
  const ComplexMatrix m = oracle::random_hermitian(8, rng);
  const Eigensystem es = hermitian_eigensystem(m);
  ComplexMatrix d = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) d(i, i) = es.spectrum.values[static_cast<std::size_t>(i)];
  CHECK(max_abs(es.vectors * d * es.vectors.adjoint() - m) <= 1e-12);
  CHECK(std::is_sorted(es.spectrum.values.rbegin(), es.spectrum.values.rend()));
}

TEST_CASE("partial_transpose") {
  std::mt19937_64 rng(5);
  const ComplexMatrix rho = oracle::random_density(8, rng);
  for (const auto &cut : all_bipartitions(3)) {
    std::vector<unsigned> qs(cut.transposed().begin(), cut.transposed().end());
    CHECK(max_abs(partial_transpose(rho, 3, cut) - oracle::brute_partial_transpose(rho, 3, qs)) == 0.0);
    CHECK(max_abs(partial_transpose(partial_transpose(rho, 3, cut), 3, cut) - rho) == 0.0);
    // A cut and its complement together transpose every qubit.
    const ComplexMatrix full = partial_transpose(partial_transpose(rho, 3, cut), 3, cut.complement(3));
    CHECK(max_abs(full - rho.transpose()) == 0.0);
  }
  SECTION("rho3(0.5) over the middle qubit") {
    require_spectrum(hermitian_eigenvalues(partial_transpose(rho3(0.5).state, Bipartition({1}))),
                     {0.25, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.0}, 1e-12);
  }
  SECTION("rho3 over the special qubit is unchanged") {
    const auto rho = rho3(0.7).state;
    CHECK(max_abs(partial_transpose(rho, Bipartition({0})) - rho.matrix()) == 0.0);
  }
  CHECK_THROWS_AS(partial_transpose(rho, 2, Bipartition({0})), DimensionError);
}

TEST_CASE("partial_trace") {
  std::mt19937_64 rng(9);
  const ComplexMatrix a = oracle::random_density(2, rng);
  const ComplexMatrix b = oracle::random_density(4, rng);
  const ComplexMatrix ab = kron(a, b);
  CHECK(max_abs(partial_trace(ab, 3, {0}) - a) <= 1e-15);
  CHECK(max_abs(partial_trace(ab, 3, {1, 2}) - b) <= 1e-15);
  const ComplexMatrix r = oracle::random_density(16, rng);
  CHECK(max_abs(partial_trace(r, 4, {0, 2}) - oracle::brute_partial_trace(r, 4, {0, 2})) <= 1e-15);
  CHECK(max_abs(partial_trace(r, 4, {3}) - oracle::brute_partial_trace(r, 4, {3})) <= 1e-15);

  SECTION("register marginal of a DQC1 state is maximally mixed") {
    for (unsigned n : {2u, 3u, 4u}) {
      const Dqc1State s = build_dqc1_state(build_un(UnitaryBlockSpec::corner_swap(), n), 0.8);
      std::set<unsigned> reg;
      for (unsigned q = 1; q <= n; ++q) reg.insert(q);
      const DensityMatrix marginal = partial_trace(s.state, reg);
      CHECK(max_abs(marginal.matrix() - identity(marginal.dim()) / static_cast<double>(marginal.dim())) <= 1e-15);
    }
  }
  SECTION("special-qubit marginal of rho3 from block traces") {
    for (double alpha : {0.0, 0.3, 1.0}) {
      const DensityMatrix m = partial_trace(rho3(alpha).state, {0});
      // Diagonal blocks trace to 1/2 each; the off-diagonal block traces to alpha tr(U_2)/8.
      ComplexMatrix expected(2, 2);
      expected << 0.5, alpha / 4, alpha / 4, 0.5;
      CHECK(max_abs(m.matrix() - expected) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(partial_trace(r, 4, {}), InvalidArgument);
  CHECK_THROWS_AS(partial_trace(r, 4, {4}), InvalidArgument);
}

TEST_CASE("trace_norm") {
  std::mt19937_64 rng(1);
  CHECK_THAT(trace_norm(oracle::random_density(8, rng)), WithinAbs(1.0, 1e-12));
  CHECK_THAT(trace_norm(partial_transpose(rho3(1.0).state, rho3_entangling_cut())), WithinAbs(1.25, 1e-12));
  CHECK_THAT(trace_norm(pauli_z()), WithinAbs(2.0, 0.0));
}

TEST_CASE("von_neumann_entropy") {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  CHECK_THAT(von_neumann_entropy(DensityMatrix::pure(v)), WithinAbs(0.0, 1e-12));
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK_THAT(von_neumann_entropy(DensityMatrix::maximally_mixed(n)), WithinAbs(n, 1e-12));
  }
  const DensityMatrix r = rho3(1.0).state;
  // rho3 splits into four coupled index pairs, each a 2x2 block with eigenvalues (1 +- alpha)/8.
  for (double alpha : {0.3, 0.8, 1.0}) {
    std::vector<double> spectrum;
    for (int pair = 0; pair < 4; ++pair) {
      spectrum.push_back((1 + alpha) / 8);
      spectrum.push_back((1 - alpha) / 8);
    }
    CHECK_THAT(von_neumann_entropy(rho3(alpha).state), WithinAbs(oracle::entropy_bits(spectrum), 1e-9));
  }
  CHECK_THAT(von_neumann_entropy(r), WithinAbs(2.0, 1e-12));
  const std::vector<double> p{0.5, 0.25, 0.25, 0.0};
  CHECK_THAT(shannon_entropy(p), WithinAbs(1.5, 1e-15));
}

TEST_CASE("relative_entropy") {
  std::mt19937_64 rng(2);
  const DensityMatrix x(oracle::random_density(4, rng));
  CHECK_THAT(relative_entropy(x, x), WithinAbs(0.0, 1e-10));
  CHECK_THAT(relative_entropy(x, DensityMatrix::maximally_mixed(2)), WithinAbs(2.0 - von_neumann_entropy(x), 1e-10));
  const DensityMatrix zero(diag({1.0, 0.0}));
  const DensityMatrix half(diag({0.5, 0.5}));
  CHECK_THAT(relative_entropy(zero, half), WithinAbs(1.0, 1e-12));
  CHECK(std::isinf(relative_entropy(half, zero)));
  CHECK_THROWS_AS(relative_entropy(half, x), DimensionError);
}

TEST_CASE("random_unitary") {
  std::mt19937_64 rng(4);
  for (std::size_t d : {2u, 4u, 8u}) CHECK(is_unitary(random_unitary(d, rng), 1e-12));
  std::mt19937_64 a(42), b(42);
  CHECK(random_unitary(4, a) == random_unitary(4, b));
}
