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
#include <vector>

#include "pecsim/report.hpp"
#include "pecsim/scenarios.hpp"

namespace pecsim {

std::string artifact_version();

struct RunOverrides {
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> assignments;  // key=value, applied before samples/seed

  void apply(ScenarioConfig& cfg) const;
};

struct OutputOptions {
  std::string output_dir = "out";
  bool svg = false;
  unsigned workers = 0;  // 0: default_worker_count()
};

/// Runs every series of a preset and writes `<dir>/<series>.csv` (and .svg),
/// plus `<dir>/<id>_manifest.json`.
RunManifest cmd_figure(const std::string& id, const RunOverrides& overrides, const OutputOptions& out);

/// Same output schema for an arbitrary configuration file; files are named
/// after the config file stem.
RunManifest cmd_run(const std::string& config_path, const RunOverrides& overrides, const OutputOptions& out);

struct DiagnoseReport {
  ScenarioConfig config;
  double comm_target_hamiltonian = 0.0;                  // ||[L_d, L_h]||
  std::optional<double> comm_target_minus_device_hamiltonian;  // ||[L_d - L_n, L_h]||
  std::optional<double> comm_device_hamiltonian;               // ||[L_n, L_h]||
  std::optional<double> trotter_error;                         // one step, exact map
  MitigationCoeffs coeffs;
  SamplingDistribution sampling;
  double overhead_per_step = 1.0;
  double overhead_total = 1.0;  // overhead_per_step ^ steps
};

DiagnoseReport diagnose(const ScenarioConfig& cfg);
std::string format_diagnose(const DiagnoseReport& report);

std::string cmd_diagnose(const std::string& config_path, const RunOverrides& overrides);

}  // namespace pecsim
