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
#include <string>
#include <vector>

#include "pecsim/scenarios.hpp"

namespace pecsim {

inline constexpr const char* kCsvHeader = "step,t,ideal,reference,mc_mean,mc_stderr,fidelity";

/// CSV with kCsvHeader; 12 significant digits, empty fields for missing values.
std::string format_csv(const TimeSeries& series);

/// Minimal line chart: ideal and reference curves, MC means with stderr bars.
std::string format_svg(const TimeSeries& series, const std::string& title);

struct ManifestEntry {
  std::string name;
  std::string config_text;
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
};

struct RunManifest {
  std::string command;
  std::string artifact_version;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double wall_clock_seconds = 0.0;
  std::vector<ManifestEntry> entries;

  std::string to_json() const;
};

/// Writes `text` to `path`, creating parent directories. Throws std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pecsim
