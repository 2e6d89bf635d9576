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

#include <string>
#include <vector>

#include "pecsim/scenarios.hpp"

namespace pecsim {

inline constexpr std::size_t kDefaultPresetSamples = 1'000'000;

/// One curve of a figure, written to `<name>.csv`.
struct PresetSeries {
  std::string name;
  std::string title;
  ScenarioConfig config;
};

struct Preset {
  std::string id;
  std::string description;
  std::vector<PresetSeries> series;
};

const std::vector<std::string>& preset_ids();

/// Throws std::invalid_argument for an unknown id.
Preset make_preset(const std::string& id);

}  // namespace pecsim
