// Copyright 2026 The pecsim Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pecsim/paulimaps.hpp"
#include "pecsim/sampler.hpp"
#include "pecsim/superops.hpp"

namespace pecsim {

enum class Hardware { digital, analog };

enum class Mitigation { exact, first_order, linear_inverse, none };

/// Which curve fills the `reference` column of a time series.
enum class ReferenceKind {
  none,
  target,  // exact propagation of the dynamics being simulated
  closed,
  damped_depolarizing,
  approx_digital,
  approx_analog,
  unmitigated_digital,
  biased,
};

std::string to_string(Hardware h);
std::string to_string(Mitigation m);
std::string to_string(ReferenceKind k);
Hardware parse_hardware(std::string_view s);
Mitigation parse_mitigation(std::string_view s);
/// Throws std::invalid_argument for an unknown kind.
ReferenceKind parse_reference_kind(std::string_view s);

/// Digital hardware takes per-step probabilities, analog hardware takes rates.
using DeviceNoise = std::variant<PauliChannelParams, PauliRates>;

struct ScenarioConfig {
  Hardware hardware = Hardware::digital;
  std::optional<PauliRates> target;  // empty for closed dynamics
  DeviceNoise device = PauliChannelParams{};
  Mitigation mitigation = Mitigation::exact;
  double omega = 1.0;
  double beta = 0.0;
  double dt = 0.5;
  int steps = 20;
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  std::optional<double> bias;
  ReferenceKind reference = ReferenceKind::target;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  double effective_bias() const { return bias.value_or(1.0); }
  bool is_open() const { return target.has_value(); }
};

Generator hamiltonian_generator(const ScenarioConfig& cfg);
/// Zero generator for closed dynamics.
Generator target_generator(const ScenarioConfig& cfg);
/// Analog: the configured rates. Digital: rates from lambda_to_kappa (exact),
/// which requires a weak channel.
Generator device_generator(const ScenarioConfig& cfg);

MitigationCoeffs mitigation_coeffs(const ScenarioConfig& cfg);

StepPlan build_scenario(const ScenarioConfig& cfg);

struct TimeSeriesRow {
  int step = 0;
  double time = 0.0;
  double ideal = 0.0;
  std::optional<double> reference;
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;
  std::optional<double> mc_stddev;
  double fidelity = 1.0;
  /// Determinant negativity beyond the clamp tolerance (0 if none).
  double negativity = 0.0;
};

struct TimeSeries {
  std::vector<TimeSeriesRow> rows;
  std::vector<ComplexMatrix> ideal_states;
  std::vector<ComplexMatrix> target_states;
};

/// Infinite-sample evolution: the step superoperator (with the expected
/// mitigation map) applied repeatedly, alongside the exact target dynamics.
TimeSeries ideal_evolution(const ScenarioConfig& cfg);

/// Fill the Monte Carlo columns from an ensemble over the same plan.
void attach_monte_carlo(TimeSeries& series, const EnsembleStats& stats);

/// ideal_evolution plus, if cfg.samples > 0, run_ensemble.
TimeSeries simulate(const ScenarioConfig& cfg, unsigned workers = 0);

struct ReferenceParams {
  double omega = 1.0;
  double dt = 0.5;
  double lambda = 0.0;    // per-step depolarizing probability (approx-digital)
  double kappa = 0.0;     // depolarizing rate
  double mu_prime = 0.0;  // biased per-Pauli sampling probability
};

ReferenceParams reference_params(const ScenarioConfig& cfg);

/// Closed-form <1|rho|1> at t = n dt. Throws for ReferenceKind::none/target.
double reference_value(ReferenceKind kind, const ReferenceParams& p, int n);

struct BiasedPrediction {
  double xi = 1.0;           // trace factor per step
  double kappa_prime = 0.0;  // effective damping rate
};

/// Requires mu_prime < 1/6 and kappa dt < 1/4; throws std::domain_error otherwise.
BiasedPrediction biased_predictions(double kappa, double dt, double mu_prime);

/// F = Tr(r1 r2) + 2 sqrt(det r1 det r2), with negative determinants clamped to 0.
double fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2);
/// Largest |det| among negative determinants of r1, r2 beyond 1e-9; else 0.
double determinant_negativity(const ComplexMatrix& r1, const ComplexMatrix& r2);

/// ||M C - exp((L_h + L_d) dt)||_F for one step. Requires exact mitigation.
double trotter_error_norm(const ScenarioConfig& cfg, double dt);

/// -ln(1 - 4 kappa dt) / (4 dt).
double unmitigated_effective_rate(double kappa, double dt);

/// Least-squares fit of ln|Bloch vector| of the ideal states against time,
/// returned as the depolarizing rate kappa with |r(t)| = exp(-4 kappa t).
double fitted_decay_rate(const TimeSeries& series);

double excited_population(const ComplexMatrix& rho);

}  // namespace pecsim
