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


// dqc1-lab: command-line front end for the dqc1lab library.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "dqc1lab/errors.hpp"
#include "dqc1lab/lab.hpp"

namespace {

// Text output; CSV and JSON keep full precision.
std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

void print_json(const nlohmann::json &j) { std::cout << j.dump(2) << '\n'; }

int run_reproduce(bool as_json, double tolerance, double perturb) {
  dqc1lab::ReproduceOptions options;
  options.tolerance = tolerance;
  options.perturbation = perturb;
  const auto report = dqc1lab::reproduce(options);
  if (!as_json) dqc1lab::print_table(std::cout, report);
  print_json(dqc1lab::to_json(report));
  return report.all_pass() ? 0 : kExitFailure;
}

int run_sweep(const std::string &quantity, double start, double end, unsigned steps,
              const std::string &out_path, unsigned qubit) {
  const auto q = dqc1lab::parse_sweep_quantity(quantity);
  if (!q) throw dqc1lab::InvalidArgument("unknown quantity '" + quantity + "'");
  if (qubit > 2) throw dqc1lab::InvalidArgument("--qubit must be 0, 1 or 2");
  dqc1lab::SweepOptions options;
  options.measured_qubit = qubit;
  const auto rows = dqc1lab::sweep(*q, start, end, steps, options);
  if (out_path.empty()) {
    dqc1lab::write_csv(std::cout, rows);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw dqc1lab::InvalidArgument("cannot open '" + out_path + "' for writing");
  dqc1lab::write_csv(out, rows);
  return 0;
}

int run_trace_estimate(unsigned n, double alpha, std::uint64_t shots, std::uint64_t seed, bool as_json) {
  const auto report = dqc1lab::trace_estimate_report(n, alpha, shots, seed);
  if (as_json) {
    print_json(report);
  } else {
    std::cout << "n=" << n << " alpha=" << fmt(alpha) << " shots=" << shots << " seed=" << seed << '\n'
              << "exact    <X>=" << fmt(report["exact"]["x"]) << " <Y>=" << fmt(report["exact"]["y"])
              << '\n'
              << "sampled  <X>=" << fmt(report["sampled"]["x"])
              << " <Y>=" << fmt(report["sampled"]["y"]) << '\n'
              << "std err  <X>=" << fmt(report["std_error"]["x"])
              << " <Y>=" << fmt(report["std_error"]["y"]) << '\n';
    if (!report["implied_normalized_trace"].is_null()) {
      const auto &t = report["implied_normalized_trace"];
      std::cout << "tr(U)/2^n exact=" << fmt(t["exact_re"]) << (double(t["exact_im"]) < 0 ? "" : "+")
                << fmt(t["exact_im"]) << "i sampled=" << fmt(t["sampled_re"])
                << (double(t["sampled_im"]) < 0 ? "" : "+") << fmt(t["sampled_im"]) << "i\n";
    }
  }
  if (report.contains("error")) {
    std::cerr << "error: " << report["error"].get<std::string>() << '\n';
    return kExitError;
  }
  return 0;
}

int run_separability(double alpha, bool as_json) {
  const auto report = dqc1lab::separability_report(alpha);
  if (as_json) {
    print_json(report);
    return 0;
  }
  std::cout << "alpha=" << fmt(alpha) << " status=" << report["status"].get<std::string>() << '\n';
  if (report.contains("witness")) {
    std::cout << "witness: transposed qubits " << report["witness"]["transposed_qubits"].dump()
              << ", PT eigenvalue " << fmt(report["witness"]["eigenvalue"]) << '\n';
  }
  if (report.contains("decomposition")) {
    const auto &d = report["decomposition"];
    std::cout << "rho3 = " << fmt(d["weight_omega"]) << " omega + " << fmt(d["weight_eta"])
              << " eta (residual " << fmt(d["reconstruction_residual"]) << ")\n"
              << "omega lambda =";
    for (const auto &l : d["omega_lambda"]) std::cout << ' ' << fmt(l);
    std::cout << '\n'
              << "omega lambda5*lambda6*lambda7*lambda8 = " << fmt(d["omega_kay_product"]) << '\n';
  }
  return 0;
}

int run_activate(double alpha, unsigned strategies, std::uint64_t seed, bool as_json) {
  const auto report = dqc1lab::activation_report(alpha, strategies, seed);
  if (as_json) {
    print_json(report);
    return 0;
  }
  std::cout << "alpha=" << fmt(alpha) << " seed=" << seed << '\n';
  for (const auto &row : report["strategies"]) {
    std::cout << row["index"].get<unsigned>() << ' ' << row["kind"].get<std::string>() << ' '
              << fmt(row["multiplicative_negativity"]) << '\n';
  }
  std::cout << "min=" << fmt(report["min"]) << " max=" << fmt(report["max"]) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"DQC1 state correlations: negativity, discord, separability and activation"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  bool json_out = false;
  double tolerance = 1e-9, perturb = 0.0;
  auto *reproduce = app.add_subcommand("reproduce", "Run the closed-form check battery");
  reproduce->add_flag("--json", json_out, "JSON only");
  reproduce->add_option("--tolerance", tolerance, "Tolerance for closed-form checks")->check(CLI::PositiveNumber);
  reproduce->add_option("--perturb", perturb, "Mix eps|000><000| into rho3")->check(CLI::Range(0.0, 1.0));

  std::string quantity, out_path;
  double start = 0.0, end = 1.0;
  unsigned steps = 11, qubit = 0;
  auto *sweep = app.add_subcommand("sweep", "Evaluate a quantity of rho3 over an alpha grid (CSV)");
  sweep->add_option("--quantity", quantity, "One of: mult-negativity, pt-spectrum-min, discord, "
                                            "classical-correlation, activated-negativity, separability")
      ->required();
  sweep->add_option("--start", start, "First alpha")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--end", end, "Last alpha")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)");
  sweep->add_option("--out", out_path, "Write CSV here instead of stdout");
  sweep->add_option("--qubit", qubit, "Measured qubit for discord and classical-correlation");

  unsigned n = 2;
  double alpha = 1.0;
  std::uint64_t shots = 10000, seed = 0;
  auto *trace = app.add_subcommand("trace-estimate", "Estimate tr(U_n)/2^n by sampling the special qubit");
  trace->add_option("--n", n, "Register qubits (2..5)")->required();
  trace->add_option("--alpha", alpha, "Polarization of the special qubit")->required()->check(CLI::Range(0.0, 1.0));
  trace->add_option("--shots", shots, "Shots per Pauli")->required()->check(CLI::PositiveNumber);
  trace->add_option("--seed", seed, "RNG seed")->required();
  trace->add_flag("--json", json_out, "JSON output");

  auto *separability = app.add_subcommand("separability", "Full-separability verdict for rho3");
  separability->add_option("--alpha", alpha, "Polarization")->required()->check(CLI::Range(0.0, 1.0));
  separability->add_flag("--json", json_out, "JSON output");

  unsigned strategies = 10;
  auto *activate = app.add_subcommand("activate", "Activated multiplicative negativity under local unitaries");
  activate->add_option("--alpha", alpha, "Polarization")->required()->check(CLI::Range(0.0, 1.0));
  activate->add_option("--strategies", strategies, "Random strategies in addition to the identity")->required();
  activate->add_option("--seed", seed, "RNG seed")->required();
  activate->add_flag("--json", json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*reproduce) return run_reproduce(json_out, tolerance, perturb);
    if (*sweep) return run_sweep(quantity, start, end, steps, out_path, qubit);
    if (*trace) return run_trace_estimate(n, alpha, shots, seed, json_out);
    if (*separability) return run_separability(alpha, json_out);
    if (*activate) return run_activate(alpha, strategies, seed, json_out);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
