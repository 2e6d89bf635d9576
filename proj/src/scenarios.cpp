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

#include "pecsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pecsim {

namespace {

constexpr double kDetClampTol = 1e-9;

const PauliChannelParams& device_lambda(const ScenarioConfig& cfg) {
  const auto* p = std::get_if<PauliChannelParams>(&cfg.device);
  if (p == nullptr) throw std::invalid_argument("digital hardware needs device noise given as per-step probabilities");
  return *p;
}

const PauliRates& device_rates(const ScenarioConfig& cfg) {
  const auto* r = std::get_if<PauliRates>(&cfg.device);
  if (r == nullptr) throw std::invalid_argument("analog hardware needs device noise given as rates");
  return *r;
}

double det2(const ComplexMatrix& m) { return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real(); }

}  // namespace

std::string to_string(Hardware h) { return h == Hardware::digital ? "digital" : "analog"; }

std::string to_string(Mitigation m) {
  switch (m) {
    case Mitigation::exact: return "exact";
    case Mitigation::first_order: return "first-order";
    case Mitigation::linear_inverse: return "linear-inverse";
    case Mitigation::none: return "none";
  }
  return "unknown";
}

std::string to_string(ReferenceKind k) {
  switch (k) {
    case ReferenceKind::none: return "none";
    case ReferenceKind::target: return "target";
    case ReferenceKind::closed: return "closed";
    case ReferenceKind::damped_depolarizing: return "damped-depolarizing";
    case ReferenceKind::approx_digital: return "approx-digital";
    case ReferenceKind::approx_analog: return "approx-analog";
    case ReferenceKind::unmitigated_digital: return "unmitigated-digital";
    case ReferenceKind::biased: return "biased";
  }
  return "unknown";
}

Hardware parse_hardware(std::string_view s) {
  if (s == "digital") return Hardware::digital;
  if (s == "analog") return Hardware::analog;
  throw std::invalid_argument("unknown hardware '" + std::string(s) + "' (expected digital or analog)");
}

Mitigation parse_mitigation(std::string_view s) {
  for (auto m : {Mitigation::exact, Mitigation::first_order, Mitigation::linear_inverse, Mitigation::none}) {
    if (s == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown mitigation '" + std::string(s) +
                              "' (expected exact, first-order, linear-inverse or none)");
}

ReferenceKind parse_reference_kind(std::string_view s) {
  for (auto k : {ReferenceKind::none, ReferenceKind::target, ReferenceKind::closed, ReferenceKind::damped_depolarizing,
                 ReferenceKind::approx_digital, ReferenceKind::approx_analog, ReferenceKind::unmitigated_digital,
                 ReferenceKind::biased}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown reference kind '" + std::string(s) + "'");
}

void ScenarioConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be > 0");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!std::isfinite(omega) || !std::isfinite(beta)) throw std::invalid_argument("omega and beta must be finite");
  if (bias && (!(*bias > 0.0) || !std::isfinite(*bias))) throw std::invalid_argument("bias must be > 0");
  if (bias && mitigation == Mitigation::none) throw std::invalid_argument("bias requires a mitigation scheme");
  if (target) target->validate();
  if (hardware == Hardware::digital) {
    device_lambda(*this).validate();
    if (mitigation == Mitigation::linear_inverse) {
      throw std::invalid_argument("linear-inverse mitigation is only defined for analog hardware");
    }
  } else {
    device_rates(*this).validate();
  }
  if (mitigation == Mitigation::linear_inverse && target) {
    throw std::invalid_argument("linear-inverse mitigation is only defined for closed dynamics");
  }
}

Generator hamiltonian_generator(const ScenarioConfig& cfg) { return unitary_generator(hamiltonian(cfg.omega, cfg.beta)); }

Generator target_generator(const ScenarioConfig& cfg) {
  return pauli_dissipator(cfg.target.value_or(PauliRates{}), GeneratorKind::target_noise);
}

Generator device_generator(const ScenarioConfig& cfg) {
  if (cfg.hardware == Hardware::analog) return pauli_dissipator(device_rates(cfg), GeneratorKind::device_noise);
  return pauli_dissipator(lambda_to_kappa(device_lambda(cfg), cfg.dt, KappaMode::exact), GeneratorKind::device_noise);
}

MitigationCoeffs mitigation_coeffs(const ScenarioConfig& cfg) {
  const PauliRates target = cfg.target.value_or(PauliRates{});
  switch (cfg.mitigation) {
    case Mitigation::none:
      return MitigationCoeffs{};
    case Mitigation::exact:
      if (cfg.hardware == Hardware::digital) {
        const auto& lambda = device_lambda(cfg);
        if (!cfg.target) return exact_inverse_coeffs(lambda);
        return general_exact_coeffs(target, lambda_to_kappa(lambda, cfg.dt, KappaMode::exact), cfg.dt);
      }
      return general_exact_coeffs(target, device_rates(cfg), cfg.dt);
    case Mitigation::first_order:
      if (cfg.hardware == Hardware::digital) {
        const auto& lambda = device_lambda(cfg);
        return first_order_coeffs(target, {lambda.lx, lambda.ly, lambda.lz}, cfg.dt);
      } else {
        const auto& kappa = device_rates(cfg);
        return first_order_coeffs(target, {kappa.x * cfg.dt, kappa.y * cfg.dt, kappa.z * cfg.dt}, cfg.dt);
      }
    case Mitigation::linear_inverse:
      return linear_inverse_coeffs(device_rates(cfg), cfg.dt);
  }
  throw std::logic_error("mitigation_coeffs: unhandled mitigation");
}

StepPlan build_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  StepPlan plan;
  const Generator lh = hamiltonian_generator(cfg);
  if (cfg.hardware == Hardware::digital) {
    plan.physical_layers.push_back(expm(lh.matrix * cfg.dt));
    plan.physical_layers.push_back(channel_superop(device_lambda(cfg)));
  } else {
    const Generator joint = combine(lh, pauli_dissipator(device_rates(cfg), GeneratorKind::device_noise));
    plan.physical_layers.push_back(expm(joint.matrix * cfg.dt));
  }
  plan.coeffs = mitigation_coeffs(cfg);
  plan.sampling = sampling_distribution(plan.coeffs, cfg.effective_bias());
  plan.steps = cfg.steps;
  plan.initial_state = excited_state();
  return plan;
}

double excited_population(const ComplexMatrix& rho) { return rho(0, 0).real(); }

ReferenceParams reference_params(const ScenarioConfig& cfg) {
  ReferenceParams p;
  p.omega = cfg.omega;
  p.dt = cfg.dt;
  if (cfg.hardware == Hardware::digital) {
    const auto& lambda = device_lambda(cfg);
    p.lambda = lambda.lx;
    p.kappa = lambda.lx / cfg.dt;
  } else {
    p.kappa = device_rates(cfg).x;
  }
  if (cfg.mitigation != Mitigation::none) {
    p.mu_prime = sampling_distribution(mitigation_coeffs(cfg), cfg.effective_bias()).mu[0];
  }
  return p;
}

double reference_value(ReferenceKind kind, const ReferenceParams& p, int n) {
  const double t = n * p.dt;
  const double osc = std::cos(2.0 * p.omega * t);
  switch (kind) {
    case ReferenceKind::closed:
      return 0.5 * (1.0 + osc);
    case ReferenceKind::damped_depolarizing:
      return 0.5 * (1.0 + std::exp(-4.0 * p.kappa * t) * osc);
    case ReferenceKind::approx_digital:
      return 0.5 * (1.0 + std::pow(1.0 - 16.0 * p.lambda * p.lambda, n) * osc);
    case ReferenceKind::approx_analog:
      return 0.5 * (1.0 + std::exp(-4.0 * p.kappa * t) / std::pow(1.0 - 4.0 * p.kappa * p.dt, n) * osc);
    case ReferenceKind::unmitigated_digital:
      return 0.5 * (1.0 + std::pow(1.0 - 4.0 * p.kappa * p.dt, n) * osc);
    case ReferenceKind::biased: {
      const BiasedPrediction b = biased_predictions(p.kappa, p.dt, p.mu_prime);
      return std::pow(b.xi, n) * 0.5 * (1.0 + std::exp(-4.0 * b.kappa_prime * t) * osc);
    }
    case ReferenceKind::none:
    case ReferenceKind::target:
      break;
  }
  throw std::invalid_argument("reference_value: '" + to_string(kind) + "' has no closed form");
}

BiasedPrediction biased_predictions(double kappa, double dt, double mu_prime) {
  const double kdt = kappa * dt;
  if (!(mu_prime >= 0.0 && mu_prime < 1.0 / 6.0)) throw std::domain_error("biased_predictions: need 0 <= mu' < 1/6");
  if (!(kdt >= 0.0 && kdt < 0.25)) throw std::domain_error("biased_predictions: need 0 <= kappa dt < 1/4");
  if (!(dt > 0.0)) throw std::domain_error("biased_predictions: need dt > 0");
  BiasedPrediction b;
  b.xi = (1.0 + 2.0 * kdt) * (1.0 - 6.0 * mu_prime) / (1.0 - 4.0 * kdt);
  b.kappa_prime = std::log((1.0 - 6.0 * mu_prime) / ((1.0 - 4.0 * kdt) * (1.0 - 2.0 * mu_prime))) / (4.0 * dt);
  return b;
}

double fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  const double overlap = (r1 * r2).trace().real();
  const double d = std::max(0.0, det2(r1)) * std::max(0.0, det2(r2));
  return overlap + 2.0 * std::sqrt(d);
}

double determinant_negativity(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  const double worst = -std::min(det2(r1), det2(r2));
  return worst > kDetClampTol ? worst : 0.0;
}

TimeSeries ideal_evolution(const ScenarioConfig& cfg) {
  const StepPlan plan = build_scenario(cfg);
  const Superoperator step = plan.step_superop();
  const Generator target = combine(hamiltonian_generator(cfg), target_generator(cfg));
  const ReferenceParams ref = reference_params(cfg);

  TimeSeries ts;
  StateVector4 v = vectorize(plan.initial_state);
  for (int n = 0; n <= cfg.steps; ++n) {
    if (n > 0) v = apply_superop(step, v);
    const ComplexMatrix ideal = devectorize(v);
    const ComplexMatrix exact = exact_propagate(target, plan.initial_state, n * cfg.dt);

    TimeSeriesRow row;
    row.step = n;
    row.time = n * cfg.dt;
    row.ideal = excited_population(ideal);
    if (cfg.reference == ReferenceKind::target) {
      row.reference = excited_population(exact);
    } else if (cfg.reference != ReferenceKind::none) {
      row.reference = reference_value(cfg.reference, ref, n);
    }
    row.fidelity = fidelity(ideal, exact);
    row.negativity = determinant_negativity(ideal, exact);
    ts.rows.push_back(row);
    ts.ideal_states.push_back(ideal);
    ts.target_states.push_back(exact);
  }
  return ts;
}

void attach_monte_carlo(TimeSeries& series, const EnsembleStats& stats) {
  if (stats.steps.size() != series.rows.size()) {
    throw std::invalid_argument("attach_monte_carlo: ensemble and series have different step counts");
  }
  for (std::size_t n = 0; n < series.rows.size(); ++n) {
    series.rows[n].mc_mean = stats.steps[n].mean;
    series.rows[n].mc_stderr = stats.steps[n].stderr_mean;
    series.rows[n].mc_stddev = stats.steps[n].stddev;
  }
}

TimeSeries simulate(const ScenarioConfig& cfg, unsigned workers) {
  TimeSeries ts = ideal_evolution(cfg);
  if (cfg.samples > 0) attach_monte_carlo(ts, run_ensemble(build_scenario(cfg), cfg.samples, cfg.seed, workers));
  return ts;
}

double trotter_error_norm(const ScenarioConfig& cfg, double dt) {
  if (cfg.mitigation != Mitigation::exact) throw std::invalid_argument("trotter_error_norm: requires exact mitigation");
  ScenarioConfig c = cfg;
  c.dt = dt;
  c.bias.reset();
  const StepPlan plan = build_scenario(c);
  const Superoperator mc = coeffs_to_superop(plan.coeffs) * plan.noisy_step();
  const Generator target = combine(hamiltonian_generator(c), target_generator(c));
  return frobenius_norm(mc - expm(target.matrix * dt));
}

double unmitigated_effective_rate(double kappa, double dt) {
  if (!(dt > 0.0) || !(4.0 * kappa * dt < 1.0)) throw std::domain_error("unmitigated_effective_rate: need 4 kappa dt < 1");
  return -std::log(1.0 - 4.0 * kappa * dt) / (4.0 * dt);
}

double fitted_decay_rate(const TimeSeries& series) {
  if (series.rows.size() < 2) throw std::invalid_argument("fitted_decay_rate: need at least two points");
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  const double n = static_cast<double>(series.rows.size());
  for (std::size_t i = 0; i < series.rows.size(); ++i) {
    const ComplexMatrix& rho = series.ideal_states[i];
    const double z = (rho(0, 0) - rho(1, 1)).real();
    const double r = std::sqrt(z * z + 4.0 * std::norm(rho(0, 1)));
    const double t = series.rows[i].time;
    const double y = std::log(r);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  return -slope / 4.0;
}

}  // namespace pecsim
