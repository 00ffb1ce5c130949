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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dqc1lab {

enum class SweepQuantity {
  MultNegativity,
  PtSpectrumMin,
  Discord,
  ClassicalCorrelation,
  ActivatedNegativity,
  Separability,
};

std::optional<SweepQuantity> parse_sweep_quantity(std::string_view name);
std::string_view to_string(SweepQuantity quantity);
std::vector<std::string_view> sweep_quantity_names();

struct SweepRow {
  double alpha;
  std::string quantity;
  double value;
  std::optional<double> closed_form;
  /** |value - closed_form| whenever closed_form is set. */
  std::optional<double> abs_error;
};

struct SweepOptions {
  /** Measured qubit for discord and classical-correlation. */
  unsigned measured_qubit = 0;
};

/** `steps` evenly spaced points from start to end inclusive. */
std::vector<double> alpha_grid(double start, double end, unsigned steps);

/**
 * Evaluates `quantity` on rho3 over alpha_grid(start, end, steps).
 * Separability values are 1 (fully separable), -1 (NPT) or 0 (inconclusive).
 */
std::vector<SweepRow> sweep(
    SweepQuantity quantity, double start, double end, unsigned steps,
    const SweepOptions &options = {});

/** %.17g */
std::string format_number(double value);

/** Header `alpha,quantity,value[,closed_form,abs_error]`, then one row per point. */
void write_csv(std::ostream &out, std::span<const SweepRow> rows);

struct Check {
  enum class Comparison { AbsWithin, GreaterThan, LessThan };

  std::string name;
  double computed;
  double expected;
  double tolerance;
  Comparison comparison;
  bool pass;
  /** Closed form or claim the check is anchored to. */
  std::string note;
};

struct ReproduceOptions {
  /** Tolerance for closed-form checks stated at 1e-9. */
  double tolerance = 1e-9;
  /** Test hook: mixes ε|000><000| into rho3 before the state checks. */
  double perturbation = 0.0;
};

struct ReproduceReport {
  std::vector<Check> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

ReproduceReport reproduce(const ReproduceOptions &options = {});

nlohmann::json to_json(const ReproduceReport &report);
void print_table(std::ostream &out, const ReproduceReport &report);

/**
 * Exact and sampled <X>, <Y> for U_n built from the corner-swap blocks, plus
 * the implied normalized trace tr(U_n)/2^n = <P>/alpha. At alpha = 0 the
 * implied estimate is null and the report carries an "error" entry.
 */
nlohmann::json trace_estimate_report(
    unsigned n, double alpha, std::uint64_t shots, std::uint64_t seed);

nlohmann::json separability_report(double alpha);

nlohmann::json activation_report(double alpha, unsigned strategies, std::uint64_t seed);

}  // namespace dqc1lab
