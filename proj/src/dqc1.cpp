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


#include "dqc1lab/dqc1.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dqc1lab/errors.hpp"

namespace dqc1lab {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

void UnitaryBlockSpec::validate(double tolerance) const {
  for (const ComplexMatrix *m : {&a1, &b1, &c1, &d1}) {
    if (m->rows() != 2 || m->cols() != 2) throw DimensionError("unitary blocks must be 2x2");
  }
  const ComplexMatrix id = identity(2);
  const double r1 = max_abs(a1.adjoint() * a1 + d1.adjoint() * d1 - id);
  const double r2 = max_abs(b1.adjoint() * b1 + c1.adjoint() * c1 - id);
  const double r3 = max_abs(a1.adjoint() * c1 + d1.adjoint() * b1);
  if (std::max({r1, r2, r3}) > tolerance) {
    throw NotUnitaryError("unitary blocks violate the column-orthonormality conditions");
  }
}

UnitaryBlockSpec UnitaryBlockSpec::corner_swap() {
  UnitaryBlockSpec spec{
      ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2),
      ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  spec.a1(1, 1) = 1.0;
  spec.b1(0, 0) = 1.0;
  spec.c1(0, 1) = 1.0;
  spec.d1(1, 0) = 1.0;
  return spec;
}

ComplexMatrix build_un(const UnitaryBlockSpec &spec, unsigned n, unsigned max_n) {
  if (n < 2) throw InvalidArgument("build_un needs n >= 2");
  if (n > max_n) {
    throw DimensionError("register size " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  }
  spec.validate();
  const ComplexMatrix id = identity(std::size_t{1} << (n - 2));
  const ComplexMatrix flip = kron_power(pauli_x(), n - 2);
  const Eigen::Index half = Eigen::Index{1} << (n - 1);

  ComplexMatrix u(2 * half, 2 * half);
  u.topLeftCorner(half, half) = kron(id, spec.a1);
  u.topRightCorner(half, half) = kron(flip, spec.c1);
  u.bottomLeftCorner(half, half) = kron(flip, spec.d1);
  u.bottomRightCorner(half, half) = kron(id, spec.b1);

  if (!is_unitary(u, 1e-12)) throw NotUnitaryError("constructed U_n is not unitary");
  return u;
}

Dqc1State build_dqc1_state(const ComplexMatrix &u, double alpha) {
  require_alpha(alpha);
  if (!is_unitary(u, 1e-10)) throw NotUnitaryError("build_dqc1_state: input is not unitary");
  const QubitRegister reg = QubitRegister::for_dimension(static_cast<std::size_t>(u.rows()));
  const Eigen::Index d = u.rows();
  const double norm = 1.0 / static_cast<double>(2 * d);

  ComplexMatrix rho(2 * d, 2 * d);
  rho.topLeftCorner(d, d) = identity(static_cast<std::size_t>(d)) * norm;
  rho.topRightCorner(d, d) = (alpha * norm) * u.adjoint();
  rho.bottomLeftCorner(d, d) = (alpha * norm) * u;
  rho.bottomRightCorner(d, d) = identity(static_cast<std::size_t>(d)) * norm;
  return Dqc1State{alpha, reg.num_qubits(), u, DensityMatrix(std::move(rho))};
}

Dqc1State rho3(double alpha) {
  require_alpha(alpha);
  ComplexMatrix m = identity(8) / 8.0;
  constexpr int kCoupled[4][2] = {{0, 7}, {1, 5}, {2, 6}, {3, 4}};
  for (const auto &pair : kCoupled) {
    m(pair[0], pair[1]) = alpha / 8.0;
    m(pair[1], pair[0]) = alpha / 8.0;
  }
  return Dqc1State{alpha, 2, build_un(UnitaryBlockSpec::corner_swap(), 2), DensityMatrix(std::move(m))};
}

PauliXY expectation_xy(const Dqc1State &s) {
  // tr[(X ⊗ I) ρ] and tr[(Y ⊗ I) ρ] only see the traces of the two
  // off-diagonal blocks of ρ.
  const ComplexMatrix &rho = s.state.matrix();
  const Eigen::Index d = rho.rows() / 2;
  const Complex lower = rho.bottomLeftCorner(d, d).trace();
  const Complex upper = rho.topRightCorner(d, d).trace();
  const Complex x = upper + lower;
  const Complex y = Complex(0.0, 1.0) * (upper - lower);
  return PauliXY{x.real(), y.real()};
}

TraceEstimate sample_trace_estimate(const Dqc1State &s, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidArgument("sample_trace_estimate needs at least one shot");
  const PauliXY exact = expectation_xy(s);
  std::mt19937_64 rng(seed);

  auto run = [&](double expectation, double &mean, double &std_error) {
    std::bernoulli_distribution plus(std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0));
    std::uint64_t ups = 0;
    for (std::uint64_t k = 0; k < shots; ++k) ups += plus(rng) ? 1 : 0;
    const double n = static_cast<double>(shots);
    mean = (2.0 * static_cast<double>(ups) - n) / n;
    std_error = std::sqrt(std::max(0.0, 1.0 - mean * mean) / n);
  };

  TraceEstimate est{};
  est.exact_re = exact.x;
  est.exact_im = exact.y;
  est.shots = shots;
  est.seed = seed;
  run(exact.x, est.sampled_re, est.std_error_re);
  run(exact.y, est.sampled_im, est.std_error_im);
  return est;
}

}  // namespace dqc1lab
