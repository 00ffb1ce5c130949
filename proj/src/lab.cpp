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


#include "dqc1lab/lab.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "dqc1lab/activation.hpp"
#include "dqc1lab/correlations.hpp"
#include "dqc1lab/dqc1.hpp"
#include "dqc1lab/errors.hpp"
#include "dqc1lab/separability.hpp"

namespace dqc1lab {

namespace {

using json = nlohmann::json;

struct QuantityName {
  SweepQuantity quantity;
  std::string_view name;
};

constexpr std::array<QuantityName, 6> kQuantityNames = {{
    {SweepQuantity::MultNegativity, "mult-negativity"},
    {SweepQuantity::PtSpectrumMin, "pt-spectrum-min"},
    {SweepQuantity::Discord, "discord"},
    {SweepQuantity::ClassicalCorrelation, "classical-correlation"},
    {SweepQuantity::ActivatedNegativity, "activated-negativity"},
    {SweepQuantity::Separability, "separability"},
}};

double mult_negativity_closed_form(double alpha) { return std::max(1.0, (2.0 * alpha + 3.0) / 4.0); }
double activated_closed_form(double alpha) { return std::max(1.0, (8.0 + 3.0 * alpha) / 8.0); }

double verdict_code(SeparabilityStatus status) {
  switch (status) {
    case SeparabilityStatus::FullySeparable:
      return 1.0;
    case SeparabilityStatus::NptEntangled:
      return -1.0;
    case SeparabilityStatus::Inconclusive:
      return 0.0;
  }
  return 0.0;
}

Check within(std::string name, double computed, double expected, double tol, std::string note) {
  const bool pass = std::abs(computed - expected) <= tol;
  return Check{std::move(name), computed, expected, tol, Check::Comparison::AbsWithin, pass, std::move(note)};
}

Check greater(std::string name, double computed, double threshold, std::string note) {
  return Check{std::move(name), computed, threshold, 0.0, Check::Comparison::GreaterThan,
               computed > threshold, std::move(note)};
}

Check less(std::string name, double computed, double threshold, std::string note) {
  return Check{std::move(name), computed, threshold, 0.0, Check::Comparison::LessThan,
               computed < threshold, std::move(note)};
}

std::string short_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string_view comparison_symbol(Check::Comparison c) {
  switch (c) {
    case Check::Comparison::AbsWithin:
      return "~=";
    case Check::Comparison::GreaterThan:
      return ">";
    case Check::Comparison::LessThan:
      return "<";
  }
  return "?";
}

DensityMatrix perturbed_rho3(double alpha, double epsilon) {
  const DensityMatrix rho = rho3(alpha).state;
  if (epsilon == 0.0) return rho;
  ComplexMatrix corner = ComplexMatrix::Zero(8, 8);
  corner(0, 0) = 1.0;
  return DensityMatrix((1.0 - epsilon) * rho.matrix() + epsilon * corner);
}

std::vector<double> pt_spectrum_closed_form(double alpha) {
  std::vector<double> s(8, 1.0 / 8.0);
  s.front() = (1.0 + 2.0 * alpha) / 8.0;
  s.back() = (1.0 - 2.0 * alpha) / 8.0;
  return s;
}

}  // namespace

std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name) {
  for (const auto &q : kQuantityNames) {
    if (q.name == name) return q.quantity;
  }
  return std::nullopt;
}

std::string_view to_string(SweepQuantity quantity) {
  for (const auto &q : kQuantityNames) {
    if (q.quantity == quantity) return q.name;
  }
  return "unknown";
}

std::vector<std::string_view> sweep_quantity_names() {
  std::vector<std::string_view> names;
  for (const auto &q : kQuantityNames) names.push_back(q.name);
  return names;
}

std::vector<double> alpha_grid(double start, double end, unsigned steps) {
  if (steps < 2) throw InvalidArgument("sweep needs at least 2 steps");
  if (!(start >= 0.0 && start <= end && end <= 1.0)) {
    throw InvalidArgument("sweep range must satisfy 0 <= start <= end <= 1");
  }
  std::vector<double> grid(steps);
  for (unsigned i = 0; i < steps; ++i) {
    grid[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  grid.back() = end;
  return grid;
}

std::vector<SweepRow> sweep(
    SweepQuantity quantity, double start, double end, unsigned steps, const SweepOptions &options) {
  const std::string name(to_string(quantity));
  std::vector<SweepRow> rows;
  for (double alpha : alpha_grid(start, end, steps)) {
    SweepRow row{alpha, name, 0.0, std::nullopt, std::nullopt};
    const DensityMatrix rho = rho3(alpha).state;
    switch (quantity) {
      case SweepQuantity::MultNegativity:
        row.value = multiplicative_negativity(rho, rho3_entangling_cut());
        row.closed_form = mult_negativity_closed_form(alpha);
        break;
      case SweepQuantity::PtSpectrumMin:
        row.value = min_pt_eigenvalue(rho, rho3_entangling_cut());
        row.closed_form = (1.0 - 2.0 * alpha) / 8.0;
        break;
      case SweepQuantity::Discord: {
        DiscordOptions opts;
        opts.certify = false;
        row.value = discord(rho, options.measured_qubit, opts).discord;
        break;
      }
      case SweepQuantity::ClassicalCorrelation:
        row.value = classical_correlation(rho, options.measured_qubit).value;
        break;
      case SweepQuantity::ActivatedNegativity:
        row.value = activate(rho, AdversaryStrategy::identity()).multiplicative_negativity;
        row.closed_form = activated_closed_form(alpha);
        break;
      case SweepQuantity::Separability:
        row.value = verdict_code(full_separability_verdict(alpha).status);
        row.closed_form = alpha <= 0.5 ? 1.0 : -1.0;
        break;
    }
    if (row.closed_form) row.abs_error = std::abs(row.value - *row.closed_form);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream &out, std::span<const SweepRow> rows) {
  const bool closed = std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.closed_form.has_value(); });
  out << "alpha,quantity,value" << (closed ? ",closed_form,abs_error" : "") << '\n';
  for (const auto &r : rows) {
    out << format_number(r.alpha) << ',' << r.quantity << ',' << format_number(r.value);
    if (closed) {
      out << ',' << (r.closed_form ? format_number(*r.closed_form) : "")
          << ',' << (r.abs_error ? format_number(*r.abs_error) : "");
    }
    out << '\n';
  }
}

bool ReproduceReport::all_pass() const { return failures() == 0; }

std::size_t ReproduceReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; }));
}

ReproduceReport reproduce(const ReproduceOptions &options) {
  ReproduceReport report;
  const double eps = options.perturbation;
  const std::vector<double> grid = alpha_grid(0.0, 1.0, 101);
  const Bipartition cut = rho3_entangling_cut();

  double spectrum_err = 0.0, mneg_err = 0.0;
  int ppt_violations = 0;
  for (double alpha : grid) {
    const DensityMatrix rho = perturbed_rho3(alpha, eps);
    const Spectrum s = hermitian_eigenvalues(partial_transpose(rho, cut));
    const std::vector<double> expected = pt_spectrum_closed_form(alpha);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      spectrum_err = std::max(spectrum_err, std::abs(s.values[k] - expected[k]));
    }
    mneg_err = std::max(mneg_err, std::abs(multiplicative_negativity(rho, cut) - mult_negativity_closed_form(alpha)));
    bool all_ppt = true;
    for (const Bipartition &c : all_bipartitions(3)) all_ppt = all_ppt && is_ppt(rho, c);
    if (alpha > 0.0 && alpha <= 0.5 && !all_ppt) ++ppt_violations;
    if (alpha > 0.5 + 1e-6 && all_ppt) ++ppt_violations;
  }
  report.checks.push_back(within("pt-spectrum of rho3 over 101 alphas (max error)", spectrum_err, 0.0, 1e-10,
                                 "{(1+2a)/8, 1/8 x6, (1-2a)/8}"));
  report.checks.push_back(within("multiplicative negativity over 101 alphas (max error)", mneg_err, 0.0,
                                 options.tolerance, "max[1, (2a+3)/4]"));
  report.checks.push_back(within("multiplicative negativity at a=1",
                                 multiplicative_negativity(perturbed_rho3(1.0, eps), cut), 1.25,
                                 options.tolerance, "5/4"));
  report.checks.push_back(within("PPT region (alphas on the wrong side of 1/2)", ppt_violations, 0.0, 0.0,
                                 "PPT under all cuts iff 0 < a <= 1/2"));

  double decomposition_err = 0.0, l5_err = 0.0, l58_err = 0.0, l67 = 0.0, product = 0.0;
  int kay_failures = 0;
  for (double alpha : grid) {
    const Rho3Decomposition parts = decompose_rho3(alpha);
    const ComplexMatrix rebuilt = parts.weight_omega * parts.omega.matrix() + parts.weight_eta * parts.eta.matrix();
    decomposition_err = std::max(decomposition_err, max_abs(rebuilt - perturbed_rho3(alpha, eps).matrix()));
    const GhzDiagonalCoefficients l = ghz_diagonal_coefficients(parts.omega);
    l5_err = std::max(l5_err, std::abs(l(5) - 2.0 * alpha / (2.0 - alpha)));
    l58_err = std::max(l58_err, std::abs(l(5) + l(8)));
    l67 = std::max({l67, std::abs(l(6)), std::abs(l(7))});
    product = std::max(product, std::abs(l.kay_product()));
    if (alpha <= 0.5 && kay_criterion(parts.omega).status != SeparabilityStatus::FullySeparable) ++kay_failures;
  }
  report.checks.push_back(within("decomposition residual (max-norm)", decomposition_err, 0.0, 1e-12,
                                 "(1-a/2) omega + (a/2) eta = rho3"));
  report.checks.push_back(within("omega: lambda5 = 2a/(2-a) (max error)", l5_err, 0.0, 1e-12, "2a/(2-a)"));
  report.checks.push_back(within("omega: lambda5 + lambda8 (max)", l58_err, 0.0, 1e-12, "lambda5 = -lambda8"));
  report.checks.push_back(within("omega: |lambda6|, |lambda7| (max)", l67, 0.0, 1e-12, "lambda6 = lambda7 = 0"));
  report.checks.push_back(within("omega: |lambda5 lambda6 lambda7 lambda8| (max)", product, 0.0, 1e-12, "product = 0"));
  report.checks.push_back(within("omega: alphas <= 1/2 without a FullySeparable Kay verdict", kay_failures, 0.0, 0.0,
                                 "PPT + product <= 0 => fully separable"));

  double activation_err = 0.0;
  for (double alpha : alpha_grid(0.0, 1.0, 11)) {
    const double value = activate(perturbed_rho3(alpha, eps), AdversaryStrategy::identity()).multiplicative_negativity;
    activation_err = std::max(activation_err, std::abs(value - activated_closed_form(alpha)));
  }
  report.checks.push_back(within("identity-strategy activation over 11 alphas (max error)", activation_err, 0.0,
                                 options.tolerance, "max[1, (8+3a)/8]"));
  double activation_min = std::numeric_limits<double>::infinity();
  for (double alpha : {0.1, 0.5, 1.0}) {
    const DensityMatrix rho = perturbed_rho3(alpha, eps);
    for (unsigned k = 1; k <= 25; ++k) {
      const auto strategy = AdversaryStrategy::seeded_random(strategy_seed(2024, k));
      activation_min = std::min(activation_min, activate(rho, strategy).multiplicative_negativity);
    }
  }
  report.checks.push_back(greater("random-strategy activation, min over 75 runs", activation_min, 1.0 + 1e-6,
                                  "> 1 for every adversary"));

  double discord_min = std::numeric_limits<double>::infinity();
  for (double alpha : {0.1, 0.25, 0.5}) {
    discord_min = std::min(discord_min, discord(perturbed_rho3(alpha, eps), 0).certified_lower_bound);
  }
  report.checks.push_back(greater("discord lower bound, special qubit, a in {0.1,0.25,0.5}", discord_min, 1e-4,
                                  "discord > 0 for 0 < a <= 1/2"));
  report.checks.push_back(less("discord lower bound, special qubit, a = 0",
                               discord(perturbed_rho3(0.0, eps), 0).certified_lower_bound, 1e-9, "0"));

  double trace_err = 0.0, worst_sigma = 0.0;
  for (unsigned n : {2u, 3u, 4u}) {
    const ComplexMatrix u = build_un(UnitaryBlockSpec::corner_swap(), n);
    for (double alpha : {0.25, 0.5, 1.0}) {
      const Dqc1State s = build_dqc1_state(u, alpha);
      const PauliXY xy = expectation_xy(s);
      const double brute = (kron(pauli_x(), identity(u.rows())) * s.state.matrix()).trace().real();
      const double formula = alpha * u.trace().real() / static_cast<double>(u.rows());
      trace_err = std::max({trace_err, std::abs(xy.x - brute), std::abs(xy.x - formula)});
    }
  }
  const Dqc1State s2 = build_dqc1_state(build_un(UnitaryBlockSpec::corner_swap(), 2), 1.0);
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const TraceEstimate est = sample_trace_estimate(s2, 100000, seed);
    worst_sigma = std::max(worst_sigma, std::abs(est.sampled_re - est.exact_re) / est.std_error_re);
  }
  report.checks.push_back(within("<X> formula vs brute force, n in {2,3,4} (max error)", trace_err, 0.0, 1e-12,
                                 "a Re tr(U_n) / 2^n"));
  report.checks.push_back(less("sampled <X> deviation in std errors, 5 seeds x 1e5 shots", worst_sigma, 6.0,
                               "within 6 sigma"));
  return report;
}

json to_json(const ReproduceReport &report) {
  json checks = json::array();
  for (const auto &c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"comparison", std::string(comparison_symbol(c.comparison))},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"note", c.note}});
  }
  return json{{"command", "reproduce"},
              {"checks", checks},
              {"failures", report.failures()},
              {"all_pass", report.all_pass()}};
}

void print_table(std::ostream &out, const ReproduceReport &report) {
  for (const auto &c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(62) << c.name << ' '
        << short_number(c.computed) << ' ' << comparison_symbol(c.comparison) << ' '
        << short_number(c.expected);
    if (c.comparison == Check::Comparison::AbsWithin) out << " (tol " << short_number(c.tolerance) << ')';
    out << "  [" << c.note << "]\n";
  }
  out << report.checks.size() - report.failures() << '/' << report.checks.size() << " checks passed\n";
}

json trace_estimate_report(unsigned n, double alpha, std::uint64_t shots, std::uint64_t seed) {
  if (n < 2 || n > kDefaultMaxRegisterQubits) throw InvalidArgument("trace-estimate needs 2 <= n <= 5");
  const ComplexMatrix u = build_un(UnitaryBlockSpec::corner_swap(), n);
  const Dqc1State state = build_dqc1_state(u, alpha);
  const TraceEstimate est = sample_trace_estimate(state, shots, seed);
  json report{{"command", "trace-estimate"},
              {"n", n},
              {"alpha", alpha},
              {"shots", shots},
              {"seed", seed},
              {"exact", {{"x", est.exact_re}, {"y", est.exact_im}}},
              {"sampled", {{"x", est.sampled_re}, {"y", est.sampled_im}}},
              {"std_error", {{"x", est.std_error_re}, {"y", est.std_error_im}}}};
  if (alpha > 0.0) {
    report["implied_normalized_trace"] = {
        {"exact_re", est.exact_re / alpha},
        {"exact_im", est.exact_im / alpha},
        {"sampled_re", est.sampled_re / alpha},
        {"sampled_im", est.sampled_im / alpha}};
  } else {
    report["implied_normalized_trace"] = nullptr;
    report["error"] = "normalized trace unestimable at alpha=0";
  }
  return report;
}

json separability_report(double alpha) {
  const SeparabilityVerdict v = full_separability_verdict(alpha);
  json report{{"command", "separability"}, {"alpha", alpha}, {"status", std::string(to_string(v.status))}};
  if (v.witness) {
    report["witness"] = {{"transposed_qubits", v.witness->cut.transposed()},
                         {"eigenvalue", v.witness->eigenvalue}};
  }
  if (v.decomposition) {
    const auto &d = *v.decomposition;
    report["decomposition"] = {
        {"weight_omega", d.weight_omega},
        {"weight_eta", d.weight_eta},
        {"reconstruction_residual", d.reconstruction_residual},
        {"omega_lambda", d.omega.coefficients.lambda},
        {"omega_kay_product", d.omega.kay_product},
        {"omega_min_pt_eigenvalues", d.omega.min_pt_eigenvalues}};
    json purities = json::array();
    for (const auto &c : d.eta_components) purities.push_back(c.local_purities);
    report["decomposition"]["eta_local_purities"] = purities;
  }
  return report;
}

json activation_report(double alpha, unsigned strategies, std::uint64_t seed) {
  const std::array<double, 1> alphas{alpha};
  const auto results = activation_sweep(alphas, strategies, seed);
  json rows = json::array();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto &r = results[k];
    lo = std::min(lo, r.multiplicative_negativity);
    hi = std::max(hi, r.multiplicative_negativity);
    json row{{"index", k},
             {"kind", r.strategy.kind() == AdversaryStrategy::Kind::Identity ? "identity" : "seeded-random"},
             {"multiplicative_negativity", r.multiplicative_negativity}};
    if (r.strategy.seed()) row["seed"] = *r.strategy.seed();
    rows.push_back(row);
  }
  return json{{"command", "activate"},
              {"alpha", alpha},
              {"seed", seed},
              {"strategies", rows},
              {"identity", results.front().multiplicative_negativity},
              {"min", lo},
              {"max", hi},
              {"closed_form", activated_closed_form(alpha)}};
}

}  // namespace dqc1lab
