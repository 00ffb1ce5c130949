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


#include "dqc1lab/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "dqc1lab/errors.hpp"

namespace dqc1lab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

std::set<unsigned> all_but(unsigned qubit, unsigned num_qubits) {
  std::set<unsigned> rest;
  for (unsigned q = 0; q < num_qubits; ++q) {
    if (q != qubit) rest.insert(q);
  }
  return rest;
}

void require_measured_qubit(const DensityMatrix &rho, unsigned qubit) {
  if (rho.num_qubits() < 2) throw InvalidArgument("measurement needs at least two qubits");
  if (qubit >= rho.num_qubits()) throw InvalidArgument("measured qubit out of range");
}

std::array<double, 3> bloch_of(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double h2(double p) { return p > kZeroEigenvalue ? -p * std::log2(p) : 0.0; }

// The measured-qubit problem reduced to the unmeasured part: measuring
// (I ± n·σ)/2 leaves the unnormalized conditional states (ρ_rest ± Σ n_j T_j)/2
// with T_j = tr_q[(σ_j)_q ρ].
class MeasurementObjective {
 public:
  struct Evaluation {
    double value;
    double lmin_plus;
    double lmin_minus;
    double p_plus;
    double p_minus;
    // Gradient of J in R^3 at the evaluation point; set only when both
    // conditional states are positive definite and it was requested.
    std::optional<std::array<double, 3>> gradient;
  };

  MeasurementObjective(const DensityMatrix &rho, unsigned qubit) {
    const unsigned n = rho.num_qubits();
    const std::set<unsigned> rest = all_but(qubit, n);
    rest_ = partial_trace(rho.matrix(), n, rest);
    rest_entropy_ = shannon_entropy(hermitian_eigenvalues(rest_).values);
    rest_dim_ = static_cast<double>(rest_.rows());
    const ComplexMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
    double n1 = 0.0, nop = 0.0, tau2 = 0.0;
    for (int j = 0; j < 3; ++j) {
      t_[j] = partial_trace(embed_single_qubit(paulis[j], qubit, n) * rho.matrix(), n, rest);
      // Hermitian because (σ_j)_q commutes with the partial trace over q.
      t_[j] = 0.5 * (t_[j] + t_[j].adjoint()).eval();
      const Spectrum s = hermitian_eigenvalues(t_[j]);
      double abs_sum = 0.0;
      for (double v : s.values) abs_sum += std::abs(v);
      const double op = std::max(std::abs(s.max()), std::abs(s.min()));
      n1 += abs_sum * abs_sum;
      nop += op * op;
      tau_[j] = t_[j].trace().real();
      tau2 += tau_[j] * tau_[j];
    }
    t_norm1_ = std::sqrt(n1);
    t_op_ = std::sqrt(nop);
    // max over unit u of ‖Σ u_j T_j‖_F² is the top eigenvalue of the Gram matrix.
    Eigen::Matrix3d gram;
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) gram(j, k) = (t_[j] * t_[k]).trace().real();
    }
    t_fro2_ = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(gram, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
    tau_norm_ = std::sqrt(tau2);
  }

  Evaluation evaluate(const std::array<double, 3> &n, bool with_gradient = false) const {
    const ComplexMatrix shift = n[0] * t_[0] + n[1] * t_[1] + n[2] * t_[2];
    const ComplexMatrix sigma_plus = 0.5 * (rest_ + shift);
    const ComplexMatrix sigma_minus = 0.5 * (rest_ - shift);
    Evaluation e{};
    if (!with_gradient) {
      const Spectrum plus = hermitian_eigenvalues(sigma_plus);
      const Spectrum minus = hermitian_eigenvalues(sigma_minus);
      fill(e, plus, minus);
      return e;
    }
    const Eigensystem plus = hermitian_eigensystem(sigma_plus);
    const Eigensystem minus = hermitian_eigensystem(sigma_minus);
    fill(e, plus.spectrum, minus.spectrum);
    if (e.lmin_plus > 0.0 && e.lmin_minus > 0.0) {
      // dJ/dv_j = ½ tr[T_j (log σ+ − log σ−)] − ½ τ_j log(p+/p−), in bits.
      const ComplexMatrix log_diff = log2_of(plus) - log2_of(minus);
      const double log_ratio = std::log2(e.p_plus / e.p_minus);
      std::array<double, 3> g{};
      for (int j = 0; j < 3; ++j) {
        g[j] = 0.5 * (t_[j] * log_diff).trace().real() - 0.5 * tau_[j] * log_ratio;
      }
      e.gradient = g;
    }
    return e;
  }

  double value(double theta, double phi) const { return evaluate(bloch_of(theta, phi)).value; }

  double rest_entropy() const { return rest_entropy_; }

  // Upper bound on J over all unit vectors n with |n − c| <= radius, where c
  // is the unit vector of the centre evaluation. Both bounds run along the
  // chord from c to n, on which σ± stay above the shrunken minima.
  double cell_bound(const std::array<double, 3> &c, const Evaluation &centre, double radius) const {
    const double fallback = std::min(rest_entropy_, 1.0);
    const double shrink = 0.5 * radius * t_op_;
    const double lp = centre.lmin_plus - shrink;
    const double lm = centre.lmin_minus - shrink;
    if (lp <= 0.0 || lm <= 0.0) return fallback;

    // First order: mean-value theorem with a bound on |∇J| along the chord.
    const double dp = 0.5 * radius * tau_norm_;
    const double pp_lo = std::max(centre.p_plus - dp, rest_dim_ * lp);
    const double pm_lo = std::max(centre.p_minus - dp, rest_dim_ * lm);
    const double pp_hi = std::min(centre.p_plus + dp, 1.0);
    const double pm_hi = std::min(centre.p_minus + dp, 1.0);
    const double log_ratio =
        std::max({std::log2(pm_hi / pp_lo), std::log2(pp_hi / pm_lo), 0.0});
    const double log_spread = std::max(-std::log2(lp), -std::log2(lm));
    const double slope = 0.5 * t_norm1_ * log_spread + 0.5 * tau_norm_ * log_ratio;
    double bound = centre.value + slope * radius;

    // Second order: J(c + δ) <= J(c) + ∇J·δ + ½ M |δ|², where the
    // directional second derivative is at most Σ± ‖T(u)‖_F² / (4 λ± ln 2)
    // (x log x has divided differences bounded by 1/λmin, and the −p log p
    // terms only lower it). For unit c and n, c·δ = −½|δ|², so with d = |δ|
    // the bound is J(c) + |g_t| d + ½ (M − g_r) d², maximized over d <= r.
    if (centre.gradient) {
      const auto &g = *centre.gradient;
      const double radial = g[0] * c[0] + g[1] * c[1] + g[2] * c[2];
      double tangential2 = 0.0;
      for (int j = 0; j < 3; ++j) tangential2 += (g[j] - radial * c[j]) * (g[j] - radial * c[j]);
      const double tangential = std::sqrt(tangential2);
      const double curvature = 0.25 * t_fro2_ * (1.0 / lp + 1.0 / lm) / std::numbers::ln2;
      const double k = curvature - radial;
      double rise = tangential * radius + 0.5 * k * radius * radius;
      if (k < 0.0 && tangential < -k * radius) rise = tangential2 / (-2.0 * k);
      bound = std::min(bound, centre.value + std::max(rise, 0.0));
    }
    return std::min(bound + 1e-12, fallback);
  }

 private:
  void fill(Evaluation &e, const Spectrum &plus, const Spectrum &minus) const {
    const double pp = plus.sum();
    const double pm = minus.sum();
    double cond = 0.0;
    // p S(σ/p) = -Σ λ log λ + p log p
    if (pp > kZeroEigenvalue) cond += shannon_entropy(plus.values) - h2(pp);
    if (pm > kZeroEigenvalue) cond += shannon_entropy(minus.values) - h2(pm);
    e.lmin_plus = plus.min();
    e.lmin_minus = minus.min();
    e.p_plus = pp;
    e.p_minus = pm;
    e.value = rest_entropy_ - cond;
  }

  static ComplexMatrix log2_of(const Eigensystem &es) {
    Eigen::VectorXd logs(static_cast<Eigen::Index>(es.spectrum.size()));
    for (std::size_t k = 0; k < es.spectrum.size(); ++k) {
      logs(static_cast<Eigen::Index>(k)) = std::log2(es.spectrum.values[k]);
    }
    return es.vectors * logs.asDiagonal() * es.vectors.adjoint();
  }

  ComplexMatrix rest_;
  std::array<ComplexMatrix, 3> t_;
  std::array<double, 3> tau_{};
  double rest_entropy_ = 0.0;
  double rest_dim_ = 1.0;
  double t_norm1_ = 0.0;
  double t_op_ = 0.0;
  double t_fro2_ = 0.0;
  double tau_norm_ = 0.0;
};

struct Candidate {
  double value;
  double theta;
  double phi;
};

// Larger value first; near-ties go to the lexicographically smaller angles.
bool better(const Candidate &a, const Candidate &b) {
  if (std::abs(a.value - b.value) > kTieTolerance) return a.value > b.value;
  return std::tie(a.theta, a.phi) < std::tie(b.theta, b.phi);
}

Candidate canonical(Candidate c) {
  // The poles do not depend on φ.
  if (c.theta <= 0.0 || c.theta >= kPi) c.phi = 0.0;
  return c;
}

double wrap_phi(double phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  return phi < 0.0 ? phi + 2.0 * kPi : phi;
}

Candidate refine(const MeasurementObjective &objective, Candidate start,
                 double theta_step, double phi_step, double tolerance) {
  Candidate cur = start;
  double gained_at_scale = 0.0;
  for (int iter = 0; iter < 10000 && (theta_step > 1e-10 || phi_step > 1e-10); ++iter) {
    const Candidate moves[4] = {
        {0.0, std::clamp(cur.theta + theta_step, 0.0, kPi), cur.phi},
        {0.0, std::clamp(cur.theta - theta_step, 0.0, kPi), cur.phi},
        {0.0, cur.theta, wrap_phi(cur.phi + phi_step)},
        {0.0, cur.theta, wrap_phi(cur.phi - phi_step)},
    };
    Candidate best = cur;
    for (Candidate m : moves) {
      m.value = objective.value(m.theta, m.phi);
      if (m.value > best.value) best = m;
    }
    if (best.value > cur.value) {
      gained_at_scale += best.value - cur.value;
      cur = best;
      continue;
    }
    // Converged once a whole scale below the grid spacing brought nothing
    // measurable.
    if (gained_at_scale < tolerance && theta_step < 1e-4) break;
    gained_at_scale = 0.0;
    theta_step *= 0.5;
    phi_step *= 0.5;
  }
  return cur;
}

}  // namespace

Bipartition rho3_entangling_cut() { return Bipartition({2}); }

double negativity(const DensityMatrix &rho, const Bipartition &cut) {
  return std::max(0.0, trace_norm(partial_transpose(rho, cut)) - 1.0);
}

double multiplicative_negativity(const DensityMatrix &rho, const Bipartition &cut) {
  return 1.0 + negativity(rho, cut);
}

double min_pt_eigenvalue(const DensityMatrix &rho, const Bipartition &cut) {
  return hermitian_eigenvalues(partial_transpose(rho, cut)).min();
}

bool is_ppt(const DensityMatrix &rho, const Bipartition &cut) {
  return min_pt_eigenvalue(rho, cut) >= -kPsdTolerance;
}

double mutual_information(const DensityMatrix &rho, const std::set<unsigned> &part_a) {
  const Bipartition side(part_a);
  const Bipartition other = side.complement(rho.num_qubits());
  return von_neumann_entropy(partial_trace(rho, side.transposed())) +
         von_neumann_entropy(partial_trace(rho, other.transposed())) -
         von_neumann_entropy(rho);
}

ComplexVector MeasurementBasis::ket() const {
  ComplexVector v(2);
  v << std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0);
  return v;
}

std::array<ComplexMatrix, 2> MeasurementBasis::projectors() const {
  const ComplexVector v = ket();
  ComplexMatrix first = v * v.adjoint();
  return {first, identity(2) - first};
}

std::array<double, 3> MeasurementBasis::bloch() const { return bloch_of(theta, phi); }

double conditional_entropy(
    const DensityMatrix &rho, unsigned measured_qubit, const MeasurementBasis &basis) {
  require_measured_qubit(rho, measured_qubit);
  double acc = 0.0;
  for (const ComplexMatrix &proj : basis.projectors()) {
    const ComplexMatrix op = embed_single_qubit(proj, measured_qubit, rho.num_qubits());
    const ComplexMatrix post = op * rho.matrix() * op;
    const double p = post.trace().real();
    if (p < kZeroEigenvalue) continue;
    acc += p * shannon_entropy(hermitian_eigenvalues(post / p).values);
  }
  return acc;
}

ClassicalCorrelation classical_correlation(
    const DensityMatrix &rho, unsigned measured_qubit, const MeasurementSearchOptions &options) {
  require_measured_qubit(rho, measured_qubit);
  if (options.theta_points < 2 || options.phi_points < 1 || options.starts == 0) {
    throw InvalidArgument("measurement search grid too small");
  }
  const MeasurementObjective objective(rho, measured_qubit);
  const double theta_step = kPi / (options.theta_points - 1);
  const double phi_step = 2.0 * kPi / options.phi_points;

  std::vector<Candidate> grid;
  grid.reserve(static_cast<std::size_t>(options.theta_points) * options.phi_points);
  for (unsigned i = 0; i < options.theta_points; ++i) {
    const double theta = i == options.theta_points - 1 ? kPi : i * theta_step;
    for (unsigned j = 0; j < options.phi_points; ++j) {
      const double phi = j * phi_step;
      grid.push_back(Candidate{objective.value(theta, phi), theta, phi});
    }
  }
  const std::size_t starts = std::min<std::size_t>(options.starts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(), better);

  Candidate best = canonical(grid.front());
  for (std::size_t s = 0; s < starts; ++s) {
    const Candidate refined = canonical(
        refine(objective, grid[s], theta_step, phi_step, options.objective_tolerance));
    if (better(refined, best)) best = refined;
  }
  return ClassicalCorrelation{best.value, MeasurementBasis{best.theta, best.phi}};
}

ClassicalCorrelationBound classical_correlation_upper_bound(
    const DensityMatrix &rho, unsigned measured_qubit, const UpperBoundOptions &options) {
  require_measured_qubit(rho, measured_qubit);
  const MeasurementObjective objective(rho, measured_qubit);

  struct Cell {
    double theta0, theta1, phi0, phi1;
    double bound;
    bool operator<(const Cell &other) const { return bound < other.bound; }
  };

  ClassicalCorrelationBound result{0.0, 0.0, 0, false};
  auto make_cell = [&](double t0, double t1, double p0, double p1) {
    const double tc = 0.5 * (t0 + t1);
    const double pc = 0.5 * (p0 + p1);
    const auto c = bloch_of(tc, pc);
    const auto centre = objective.evaluate(c, true);
    ++result.cells_evaluated;
    result.best_attained = std::max(result.best_attained, centre.value);
    // Along the latitude through the centre, then along the meridian.
    const double radius = 0.5 * (t1 - t0) + std::sin(tc) * 0.5 * (p1 - p0);
    return Cell{t0, t1, p0, p1, objective.cell_bound(c, centre, radius)};
  };

  // J(n) = J(-n), so the upper hemisphere covers every measurement.
  std::priority_queue<Cell> cells;
  constexpr int kThetaCells = 8;
  constexpr int kPhiCells = 16;
  for (int i = 0; i < kThetaCells; ++i) {
    for (int j = 0; j < kPhiCells; ++j) {
      cells.push(make_cell(
          0.5 * kPi * i / kThetaCells, 0.5 * kPi * (i + 1) / kThetaCells,
          2.0 * kPi * j / kPhiCells, 2.0 * kPi * (j + 1) / kPhiCells));
    }
  }
  while (cells.top().bound - result.best_attained > options.tolerance &&
         result.cells_evaluated + 4 <= options.max_cells) {
    const Cell c = cells.top();
    cells.pop();
    const double tm = 0.5 * (c.theta0 + c.theta1);
    const double pm = 0.5 * (c.phi0 + c.phi1);
    cells.push(make_cell(c.theta0, tm, c.phi0, pm));
    cells.push(make_cell(c.theta0, tm, pm, c.phi1));
    cells.push(make_cell(tm, c.theta1, c.phi0, pm));
    cells.push(make_cell(tm, c.theta1, pm, c.phi1));
  }
  result.upper = std::max(cells.top().bound, result.best_attained);
  result.converged = result.upper - result.best_attained <= options.tolerance;
  return result;
}

DiscordResult discord(
    const DensityMatrix &rho, unsigned measured_qubit, const DiscordOptions &options) {
  require_measured_qubit(rho, measured_qubit);
  const double info = mutual_information(rho, {measured_qubit});
  const ClassicalCorrelation cc = classical_correlation(rho, measured_qubit, options.search);
  const double raw = info - cc.value;
  if (raw < -1e-9) {
    throw Error("classical correlation exceeds mutual information by " + std::to_string(-raw));
  }
  DiscordResult out{info, cc.value, std::max(raw, 0.0), cc.basis, 0.0};
  if (options.certify) {
    const auto bound = classical_correlation_upper_bound(rho, measured_qubit, options.bound);
    out.certified_lower_bound = std::max(0.0, info - bound.upper);
  }
  return out;
}

}  // namespace dqc1lab
