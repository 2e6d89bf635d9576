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

#include "pecsim/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "pecsim/config.hpp"
#include "pecsim/presets.hpp"

#ifndef PECSIM_VERSION
#define PECSIM_VERSION "dev"
#endif

namespace pecsim {

namespace {

std::string join(const std::string& dir, const std::string& file) { return (std::filesystem::path(dir) / file).string(); }

ManifestEntry run_series(const std::string& name, const std::string& title, const ScenarioConfig& cfg,
                         const OutputOptions& out) {
  const TimeSeries ts = simulate(cfg, out.workers);
  ManifestEntry e;
  e.name = name;
  e.config_text = format_config(cfg);
  const std::string csv = join(out.output_dir, name + ".csv");
  write_text_file(csv, format_csv(ts));
  e.outputs.push_back(csv);
  if (out.svg) {
    const std::string svg = join(out.output_dir, name + ".svg");
    write_text_file(svg, format_svg(ts, title));
    e.outputs.push_back(svg);
  }
  int flagged = 0, first = -1;
  double worst = 0.0;
  for (const auto& r : ts.rows) {
    if (r.negativity <= 0.0) continue;
    if (first < 0) first = r.step;
    ++flagged;
    worst = std::max(worst, r.negativity);
  }
  if (flagged > 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "non-physical state at %d steps (first at step %d): determinant negativity up to %.3g",
                  flagged, first, worst);
    e.warnings.emplace_back(buf);
  }
  return e;
}

void finish(RunManifest& m, const std::string& stem, const OutputOptions& out,
            std::chrono::steady_clock::time_point start) {
  m.artifact_version = artifact_version();
  m.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string path = join(out.output_dir, stem + "_manifest.json");
  if (!m.entries.empty()) m.entries.front().outputs.push_back(path);
  write_text_file(path, m.to_json());
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string g(const std::optional<double>& v) { return v ? g(*v) : std::string("n/a"); }

}  // namespace

std::string artifact_version() { return PECSIM_VERSION; }

void RunOverrides::apply(ScenarioConfig& cfg) const {
  for (const auto& a : assignments) apply_override(cfg, a);
  if (samples) cfg.samples = *samples;
  if (seed) cfg.seed = *seed;
}

RunManifest cmd_figure(const std::string& id, const RunOverrides& overrides, const OutputOptions& out) {
  const auto start = std::chrono::steady_clock::now();
  const Preset preset = make_preset(id);
  RunManifest m;
  m.command = "figure " + id;
  for (const auto& s : preset.series) {
    ScenarioConfig cfg = s.config;
    overrides.apply(cfg);
    m.seed = cfg.seed;
    m.samples = cfg.samples;
    m.entries.push_back(run_series(s.name, s.title, cfg, out));
  }
  finish(m, id, out, start);
  return m;
}

RunManifest cmd_run(const std::string& config_path, const RunOverrides& overrides, const OutputOptions& out) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioConfig cfg = load_config(config_path);
  overrides.apply(cfg);
  const std::string stem = std::filesystem::path(config_path).stem().string();
  RunManifest m;
  m.command = "run --config " + config_path;
  m.seed = cfg.seed;
  m.samples = cfg.samples;
  m.entries.push_back(run_series(stem, stem, cfg, out));
  finish(m, stem, out, start);
  return m;
}

DiagnoseReport diagnose(const ScenarioConfig& cfg) {
  cfg.validate();
  DiagnoseReport r;
  r.config = cfg;
  const Generator lh = hamiltonian_generator(cfg);
  const Generator ld = target_generator(cfg);
  r.comm_target_hamiltonian = commutator_norm(ld, lh);
  try {
    const Generator ln = device_generator(cfg);
    r.comm_target_minus_device_hamiltonian = commutator_norm(ld.matrix - ln.matrix, lh.matrix);
    r.comm_device_hamiltonian = commutator_norm(ln, lh);
  } catch (const std::domain_error&) {
    // Strong digital channels have no rate representation.
  }
  ScenarioConfig exact = cfg;
  exact.mitigation = Mitigation::exact;
  exact.bias.reset();
  try {
    r.trotter_error = trotter_error_norm(exact, cfg.dt);
  } catch (const std::domain_error&) {
  }
  r.coeffs = mitigation_coeffs(cfg);
  r.sampling = sampling_distribution(r.coeffs, cfg.effective_bias());
  r.overhead_per_step = r.sampling.prefactor;
  r.overhead_total = std::pow(r.overhead_per_step, cfg.steps);
  return r;
}

std::string format_diagnose(const DiagnoseReport& r) {
  std::ostringstream s;
  const auto& c = r.config;
  s << "scenario: " << to_string(c.hardware) << ", " << (c.is_open() ? "open" : "closed") << " target, "
    << to_string(c.mitigation) << " mitigation, omega=" << g(c.omega) << ", beta=" << g(c.beta) << ", dt=" << g(c.dt)
    << ", steps=" << c.steps << "\n";
  s << "||[L_d, L_h]||        = " << g(r.comm_target_hamiltonian) << "\n";
  s << "||[L_d - L_n, L_h]||  = " << g(r.comm_target_minus_device_hamiltonian) << "\n";
  s << "||[L_n, L_h]||        = " << g(r.comm_device_hamiltonian) << "\n";
  s << "trotter error (1 step, exact map) = " << g(r.trotter_error) << "\n";
  s << "q  = (" << g(r.coeffs.q0) << ", " << g(r.coeffs.q1) << ", " << g(r.coeffs.q2) << ", " << g(r.coeffs.q3)
    << ")\n";
  s << "mu = (" << g(r.sampling.mu[0]) << ", " << g(r.sampling.mu[1]) << ", " << g(r.sampling.mu[2]) << ")";
  if (r.sampling.bias != 1.0) s << "  [bias " << g(r.sampling.bias) << "]";
  s << "\n";
  s << "signs = (" << r.sampling.signs[0] << ", " << r.sampling.signs[1] << ", " << r.sampling.signs[2] << ")\n";
  s << "overhead per step = " << g(r.overhead_per_step) << "\n";
  s << "overhead over " << c.steps << " steps = " << g(r.overhead_total) << "\n";
  return s.str();
}

std::string cmd_diagnose(const std::string& config_path, const RunOverrides& overrides) {
  ScenarioConfig cfg = load_config(config_path);
  overrides.apply(cfg);
  return format_diagnose(diagnose(cfg));
}

}  // namespace pecsim
