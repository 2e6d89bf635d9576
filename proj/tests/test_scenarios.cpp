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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "pecsim/scenarios.hpp"

using namespace pecsim;
using std::numbers::pi;

namespace {

ScenarioConfig digital_depol(Mitigation m) {
  ScenarioConfig c;
  c.hardware = Hardware::digital;
  c.device = PauliChannelParams{0.05, 0.05, 0.05};
  c.mitigation = m;
  c.reference = ReferenceKind::none;
  return c;
}

ScenarioConfig analog(Mitigation m, PauliRates device, std::optional<PauliRates> target = std::nullopt) {
  ScenarioConfig c;
  c.hardware = Hardware::analog;
  c.device = device;
  c.target = target;
  c.mitigation = m;
  c.reference = ReferenceKind::target;
  return c;
}

ScenarioConfig digital_open(Mitigation m, double beta) {
  ScenarioConfig c;
  c.hardware = Hardware::digital;
  c.device = PauliChannelParams{0.16, 0.12, 0.2};
  c.target = PauliRates{0.3, 0.0, 0.0};
  c.mitigation = m;
  c.beta = beta;
  return c;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("enum names round-trip") {
  for (auto h : {Hardware::digital, Hardware::analog}) CHECK(parse_hardware(to_string(h)) == h);
  for (auto m : {Mitigation::exact, Mitigation::first_order, Mitigation::linear_inverse, Mitigation::none}) {
    CHECK(parse_mitigation(to_string(m)) == m);
  }
  for (auto k : {ReferenceKind::none, ReferenceKind::target, ReferenceKind::closed, ReferenceKind::damped_depolarizing,
                 ReferenceKind::approx_digital, ReferenceKind::approx_analog, ReferenceKind::unmitigated_digital,
                 ReferenceKind::biased}) {
    CHECK(parse_reference_kind(to_string(k)) == k);
  }
  CHECK(to_string(Mitigation::first_order) == "first-order");
  CHECK_THROWS_AS(parse_hardware("quantum"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mitigation("first_order"), std::invalid_argument);
  CHECK_THROWS_AS(parse_reference_kind(""), std::invalid_argument);
}

TEST_CASE("configuration validation") {
  CHECK_NOTHROW(digital_depol(Mitigation::exact).validate());
  ScenarioConfig c = digital_depol(Mitigation::linear_inverse);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = analog(Mitigation::linear_inverse, {0.1, 0.1, 0.1}, PauliRates{0.3, 0.0, 0.0});
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = digital_depol(Mitigation::none);
  c.bias = 0.97;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = digital_depol(Mitigation::exact);
  c.device = PauliRates{0.1, 0.1, 0.1};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = digital_depol(Mitigation::exact);
  c.dt = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = digital_depol(Mitigation::exact);
  c.steps = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = digital_depol(Mitigation::exact);
  c.bias = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = analog(Mitigation::exact, {-0.1, 0.0, 0.0});
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("scenario layers") {
  const StepPlan d = build_scenario(digital_depol(Mitigation::exact));
  REQUIRE(d.physical_layers.size() == 2);
  CHECK(oracle::max_diff(d.physical_layers[1], oracle::pauli_mix({0.85, 0.05, 0.05, 0.05})) < 1e-15);
  CHECK(oracle::max_diff(d.physical_layers[0], oracle::taylor_expm(oracle::lh(1.0, 0.0) * Complex(0.5))) < 1e-14);
  const StepPlan a = build_scenario(analog(Mitigation::exact, {0.3, 0.0, 0.0}));
  REQUIRE(a.physical_layers.size() == 1);
  const ComplexMatrix joint = oracle::lh(1.0, 0.0) + oracle::ld({0.3, 0.0, 0.0});
  CHECK(oracle::max_diff(a.physical_layers[0], oracle::taylor_expm(joint * Complex(0.5))) < 1e-14);
  CHECK(d.steps == 20);
  CHECK(d.initial_state == excited_state());
}

TEST_CASE("closed-form populations at the first step") {
  ReferenceParams p;
  p.lambda = 0.05;
  p.kappa = 0.1;
  CHECK(reference_value(ReferenceKind::closed, p, 0) == 1.0);
  CHECK(reference_value(ReferenceKind::closed, p, 1) == doctest::Approx(0.7701511529340699).epsilon(1e-15));
  CHECK(reference_value(ReferenceKind::damped_depolarizing, p, 1) == doctest::Approx(0.7211810568865961).epsilon(1e-15));
  CHECK(reference_value(ReferenceKind::approx_digital, p, 1) == doctest::Approx(0.7593451068167071).epsilon(1e-15));
  CHECK(reference_value(ReferenceKind::approx_analog, p, 1) == doctest::Approx(0.776476321108245).epsilon(1e-15));
  CHECK(reference_value(ReferenceKind::unmitigated_digital, p, 1) == doctest::Approx(0.7161209223472559).epsilon(1e-15));
  CHECK_THROWS_AS(reference_value(ReferenceKind::target, p, 1), std::invalid_argument);
  CHECK_THROWS_AS(reference_value(ReferenceKind::none, p, 1), std::invalid_argument);
}

TEST_CASE("digital closed evolution under each mitigation scheme") {
  const ScenarioConfig exact = digital_depol(Mitigation::exact);
  const TimeSeries e = ideal_evolution(exact);
  REQUIRE(e.rows.size() == 21);
  for (const auto& r : e.rows) {
    CHECK(std::abs(r.ideal - oracle::closed(1.0, r.time)) < 1e-12);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  }
  // First-order: Bloch shrink per step (1 - 4 lambda)(1 + 4 lambda).
  const TimeSeries f = ideal_evolution(digital_depol(Mitigation::first_order));
  for (const auto& r : f.rows) {
    const double shrink = std::pow(0.8 * 1.2, r.step);
    CHECK(std::abs(r.ideal - 0.5 * (1.0 + shrink * std::cos(2.0 * r.time))) < 1e-12);
  }
  CHECK(f.rows[1].ideal == doctest::Approx(0.759345).epsilon(1e-6));
  const TimeSeries n = ideal_evolution(digital_depol(Mitigation::none));
  for (const auto& r : n.rows) CHECK(std::abs(r.ideal - 0.5 * (1.0 + std::pow(0.8, r.step) * std::cos(2.0 * r.time))) < 1e-12);
}

TEST_CASE("trace is preserved by every scheme") {
  const std::vector<ScenarioConfig> cfgs = {
      digital_depol(Mitigation::exact), digital_depol(Mitigation::first_order), digital_depol(Mitigation::none),
      analog(Mitigation::linear_inverse, {0.1, 0.1, 0.1}), analog(Mitigation::first_order, {0.4, 0.1, 0.1}, PauliRates{0.3, 0, 0}),
      digital_open(Mitigation::exact, 0.3)};
  for (const auto& c : cfgs) {
    for (const auto& rho : ideal_evolution(c).ideal_states) CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("linear-inverse analog amplitudes grow past one") {
  const TimeSeries ts = ideal_evolution(analog(Mitigation::linear_inverse, {0.1, 0.1, 0.1}));
  bool above = false;
  for (const auto& r : ts.rows) {
    const double amp = std::exp(-0.4 * r.time) / std::pow(0.8, r.step);
    CHECK(std::abs(r.ideal - 0.5 * (1.0 + amp * std::cos(2.0 * r.time))) < 1e-12);
    above = above || r.ideal > 1.0;
  }
  CHECK(above);
}

TEST_CASE("analog depolarizing target with exact mitigation follows the damped closed form") {
  ScenarioConfig c = analog(Mitigation::exact, {0.2, 0.2, 0.2}, PauliRates{0.1, 0.1, 0.1});
  for (const auto& r : ideal_evolution(c).rows) CHECK(std::abs(r.ideal - oracle::damped(1.0, 0.1, r.time)) < 1e-12);
}

TEST_CASE("fidelity") {
  const ComplexMatrix one = excited_state();
  const ComplexMatrix zero{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix mixed{{0.5, 0.0}, {0.0, 0.5}};
  CHECK(fidelity(one, zero) == 0.0);
  CHECK(fidelity(mixed, mixed) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity(one, mixed) == doctest::Approx(0.5).epsilon(1e-15));
  std::mt19937_64 gen(8);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix r = oracle::random_density(gen);
    CHECK(fidelity(r, r) == doctest::Approx(1.0).epsilon(1e-13));
  }
  const ComplexMatrix bad{{1.2, 0.0}, {0.0, -0.2}};
  CHECK(determinant_negativity(bad, mixed) == doctest::Approx(0.24));
  const ComplexMatrix tiny{{1.0 + 1e-10, 0.0}, {0.0, -1e-10}};
  CHECK(determinant_negativity(tiny, mixed) == 0.0);
  CHECK(fidelity(bad, mixed) == doctest::Approx(0.5));
}

TEST_CASE("biased sampling predictions") {
  const BiasedPrediction lo = biased_predictions(0.1, 0.5, 0.97 * 0.0625 / 1.375);
  CHECK(lo.xi == doctest::Approx(1.01125).epsilon(1e-12));
  CHECK(lo.kappa_prime == doctest::Approx(0.00409584).epsilon(1e-5));
  const BiasedPrediction hi = biased_predictions(0.1, 0.5, 1.03 * 0.0625 / 1.375);
  CHECK(hi.xi == doctest::Approx(0.98875).epsilon(1e-12));
  CHECK(hi.kappa_prime == doctest::Approx(-0.00415463).epsilon(1e-5));
  const BiasedPrediction unbiased = biased_predictions(0.1, 0.5, 0.0625 / 1.375);
  CHECK(unbiased.xi == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(unbiased.kappa_prime) < 1e-14);
  CHECK_THROWS_AS(biased_predictions(0.1, 0.5, 0.2), std::domain_error);
  CHECK_THROWS_AS(biased_predictions(0.6, 0.5, 0.01), std::domain_error);
}

TEST_CASE("biased ideal evolution matches its closed form") {
  ScenarioConfig c = digital_depol(Mitigation::exact);
  c.beta = pi / 2;
  c.reference = ReferenceKind::biased;
  for (double bias : {0.97, 1.03}) {
    c.bias = bias;
    for (const auto& r : ideal_evolution(c).rows) CHECK(std::abs(r.ideal - *r.reference) < 1e-12);
  }
}

TEST_CASE("Trotter error") {
  CHECK(trotter_error_norm(digital_open(Mitigation::exact, pi / 2), 0.5) < 1e-12);
  CHECK(trotter_error_norm(digital_open(Mitigation::exact, 0.0), 0.5) > 1e-3);
  CHECK(trotter_error_norm(analog(Mitigation::exact, {0.3, 0.0, 0.0}), 0.5) > 1e-3);
  CHECK(trotter_error_norm(analog(Mitigation::exact, {0.1, 0.1, 0.1}), 0.5) < 1e-12);
  CHECK_THROWS_AS(trotter_error_norm(digital_open(Mitigation::first_order, 0.0), 0.5), std::invalid_argument);

  const std::vector<double> dts = {0.125, 0.0625, 0.03125, 0.015625};
  for (double beta : {0.0, pi / 4}) {
    std::vector<double> err;
    for (double dt : dts) err.push_back(trotter_error_norm(digital_open(Mitigation::exact, beta), dt));
    CHECK(slope(dts, err) == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("digital open exact mitigation equals the analog depolarizing case") {
  ScenarioConfig d = digital_open(Mitigation::exact, 0.0);
  d.device = PauliChannelParams{0.05, 0.05, 0.05};
  ScenarioConfig a = analog(Mitigation::exact, {0.1, 0.1, 0.1}, PauliRates{0.3, 0.0, 0.0});
  a.device = lambda_to_kappa({0.05, 0.05, 0.05}, 0.5);
  const TimeSeries td = ideal_evolution(d), ta = ideal_evolution(a);
  for (std::size_t n = 0; n < td.rows.size(); ++n) CHECK(oracle::max_diff(td.ideal_states[n], ta.ideal_states[n]) < 1e-12);
}

TEST_CASE("unmitigated decay rate") {
  CHECK(unmitigated_effective_rate(0.1, 0.5) == doctest::Approx(0.11157177565710488).epsilon(1e-14));
  ScenarioConfig c = digital_depol(Mitigation::none);
  c.beta = pi / 2;
  CHECK(fitted_decay_rate(ideal_evolution(c)) == doctest::Approx(0.11157177565710488).epsilon(1e-12));
  CHECK_THROWS_AS(unmitigated_effective_rate(0.5, 0.5), std::domain_error);
}

TEST_CASE("Monte Carlo columns appear only when sampling") {
  ScenarioConfig c = digital_depol(Mitigation::exact);
  c.steps = 5;
  const TimeSeries none = simulate(c);
  for (const auto& r : none.rows) CHECK_FALSE(r.mc_mean.has_value());
  c.samples = 4000;
  const TimeSeries mc = simulate(c, 1);
  for (const auto& r : mc.rows) {
    REQUIRE(r.mc_mean.has_value());
    CHECK(std::abs(*r.mc_mean - r.ideal) <= 5.0 * *r.mc_stderr + 1e-15);
  }
  TimeSeries wrong = ideal_evolution(c);
  EnsembleStats short_stats;
  short_stats.steps.resize(2);
  CHECK_THROWS_AS(attach_monte_carlo(wrong, short_stats), std::invalid_argument);
}
