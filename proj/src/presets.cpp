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

#include "pecsim/presets.hpp"

#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace pecsim {

namespace {

using std::numbers::pi;

struct BetaCase {
  double beta;
  const char* suffix;
  const char* label;
};

constexpr BetaCase kBetas[] = {{pi / 2, "beta_pi2", "beta=pi/2"}, {pi / 4, "beta_pi4", "beta=pi/4"}, {0.0, "beta0", "beta=0"}};

ScenarioConfig base(Hardware hw, Mitigation m, std::size_t samples, ReferenceKind ref) {
  ScenarioConfig c;
  c.hardware = hw;
  c.mitigation = m;
  c.omega = 1.0;
  c.beta = 0.0;
  c.dt = 0.5;
  c.steps = 20;
  c.samples = samples;
  c.seed = 42;
  c.reference = ref;
  if (hw == Hardware::analog) c.device = PauliRates{};
  return c;
}

Preset single(std::string id, std::string description, ScenarioConfig cfg) {
  Preset p{id, std::move(description), {}};
  p.series.push_back({id, p.description, std::move(cfg)});
  return p;
}

Preset beta_sweep(std::string id, std::string description, const ScenarioConfig& proto) {
  Preset p{id, std::move(description), {}};
  for (const auto& b : kBetas) {
    ScenarioConfig c = proto;
    c.beta = b.beta;
    p.series.push_back({id + "_" + b.suffix, p.description + ", " + b.label, c});
  }
  return p;
}

Preset beta_single(std::string id, std::string description, ScenarioConfig cfg, double beta) {
  cfg.beta = beta;
  return single(std::move(id), std::move(description), std::move(cfg));
}

constexpr PauliChannelParams kDepol005{0.05, 0.05, 0.05};
constexpr PauliChannelParams kFig5Lambda{0.16, 0.12, 0.2};
constexpr PauliRates kDepol01{0.1, 0.1, 0.1};
constexpr PauliRates kXOnly03{0.3, 0.0, 0.0};

Preset digital_closed(const std::string& id, Mitigation m, ReferenceKind ref, const std::string& what) {
  ScenarioConfig c = base(Hardware::digital, m, kDefaultPresetSamples, ref);
  c.device = kDepol005;
  return single(id, "digital closed dynamics, depolarizing lambda=0.05, " + what, c);
}

Preset analog_closed_depol(const std::string& id, Mitigation m, ReferenceKind ref, const std::string& what) {
  ScenarioConfig c = base(Hardware::analog, m, kDefaultPresetSamples, ref);
  c.device = kDepol01;
  return single(id, "analog closed dynamics, depolarizing kappa=0.1, " + what, c);
}

Preset analog_closed_x(const std::string& id, Mitigation m, const std::string& what) {
  ScenarioConfig c = base(Hardware::analog, m, kDefaultPresetSamples, ReferenceKind::closed);
  c.device = kXOnly03;
  return beta_sweep(id, "analog closed dynamics, Pauli-X kappa=0.3, " + what, c);
}

ScenarioConfig digital_open(Mitigation m) {
  ScenarioConfig c = base(Hardware::digital, m, 0, ReferenceKind::target);
  c.device = kFig5Lambda;
  c.target = kXOnly03;
  return c;
}

ScenarioConfig analog_open(Mitigation m, const PauliRates& device, std::size_t samples) {
  ScenarioConfig c = base(Hardware::analog, m, samples, ReferenceKind::target);
  c.device = device;
  c.target = kXOnly03;
  return c;
}

Preset unmitigated() {
  ScenarioConfig c = base(Hardware::digital, Mitigation::none, 0, ReferenceKind::unmitigated_digital);
  c.beta = pi / 2;
  c.device = kDepol005;
  c.target = kDepol01;
  return single("figA1", "unmitigated digital simulation, depolarizing kappa*dt=0.05 vs. the master equation", c);
}

Preset biased(const std::string& id, double bias) {
  ScenarioConfig c = base(Hardware::digital, Mitigation::exact, kDefaultPresetSamples, ReferenceKind::biased);
  c.beta = pi / 2;
  c.device = kDepol005;
  c.bias = bias;
  char buf[96];
  std::snprintf(buf, sizeof buf, "exact PEC with biased sampling probabilities mu'=%.2f mu", bias);
  return single(id, buf, c);
}

Preset dt_sweep() {
  Preset p{"dtsweep", "first-order digital PEC at shrinking dt: fixed lambda vs. lambda proportional to dt", {}};
  for (double dt : {0.5, 0.25, 0.125, 0.0625}) {
    char tag[32];
    std::snprintf(tag, sizeof tag, "dt%g", dt);
    for (bool proportional : {false, true}) {
      ScenarioConfig c = base(Hardware::digital, Mitigation::first_order, 0, ReferenceKind::approx_digital);
      const double lambda = proportional ? 0.1 * dt : 0.05;
      c.device = PauliChannelParams{lambda, lambda, lambda};
      c.dt = dt;
      c.steps = static_cast<int>(10.0 / dt + 0.5);
      const std::string kind = proportional ? "proportional" : "fixed";
      p.series.push_back({"dtsweep_" + kind + "_" + tag, p.description + " (" + kind + ", " + tag + ")", c});
    }
  }
  return p;
}

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {"fig1a", "fig1b",  "fig2a", "fig2b", "fig3",  "fig4",
                                               "fig5",  "fig6a",  "fig6b", "fig6c", "fig7",  "fig8",
                                               "fig9",  "figA1",  "figB1a", "figB1b", "dtsweep"};
  return ids;
}

Preset make_preset(const std::string& id) {
  if (id == "fig1a") return digital_closed(id, Mitigation::exact, ReferenceKind::closed, "exact PEC");
  if (id == "fig1b") return digital_closed(id, Mitigation::first_order, ReferenceKind::approx_digital, "first-order PEC");
  if (id == "fig2a") return analog_closed_depol(id, Mitigation::exact, ReferenceKind::closed, "exact PEC");
  if (id == "fig2b") {
    return analog_closed_depol(id, Mitigation::linear_inverse, ReferenceKind::approx_analog, "linear-inverse PEC");
  }
  if (id == "fig3") return analog_closed_x(id, Mitigation::exact, "exact PEC");
  if (id == "fig4") return analog_closed_x(id, Mitigation::linear_inverse, "linear-inverse PEC");
  if (id == "fig5") {
    return beta_sweep(id, "digital open dynamics, lambda=(0.16,0.12,0.2), gamma=0.3, exact PEC",
                      digital_open(Mitigation::exact));
  }
  const std::string fig6 = "digital open dynamics, lambda=(0.16,0.12,0.2), gamma=0.3, first-order PEC";
  if (id == "fig6a") return beta_single(id, fig6 + ", beta=0", digital_open(Mitigation::first_order), 0.0);
  if (id == "fig6b") return beta_single(id, fig6 + ", beta=pi/4", digital_open(Mitigation::first_order), pi / 4);
  if (id == "fig6c") return beta_single(id, fig6 + ", beta=pi/2", digital_open(Mitigation::first_order), pi / 2);
  if (id == "fig7") {
    return beta_sweep(id, "analog open dynamics, depolarizing kappa=0.1, gamma=0.3, first-order PEC",
                      analog_open(Mitigation::first_order, kDepol01, 0));
  }
  if (id == "fig8") {
    return beta_sweep(id, "analog open dynamics, biased Pauli-X noise kappa=0.1, gamma=0.3, exact PEC",
                      analog_open(Mitigation::exact, {0.4, 0.1, 0.1}, kDefaultPresetSamples));
  }
  if (id == "fig9") {
    return beta_sweep(id, "analog open dynamics, biased Pauli-X noise kappa=0.1, gamma=0.3, first-order PEC",
                      analog_open(Mitigation::first_order, {0.4, 0.1, 0.1}, 0));
  }
  if (id == "figA1") return unmitigated();
  if (id == "figB1a") return biased(id, 0.97);
  if (id == "figB1b") return biased(id, 1.03);
  if (id == "dtsweep") return dt_sweep();
  throw std::invalid_argument("unknown preset '" + id + "'");
}

}  // namespace pecsim
