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

// Flat `key = value` scenario files. See README.md for the grammar.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pecsim/scenarios.hpp"

namespace pecsim {

/// A schema violation. what() is "<source>:<line>: <field>: <message>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, std::string field, const std::string& message);

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

ScenarioConfig parse_config(std::string_view text, const std::string& source = "<config>");
ScenarioConfig load_config(const std::string& path);

/// Apply one `key=value` override on top of an existing configuration.
void apply_override(ScenarioConfig& cfg, std::string_view assignment);

/// Canonical text form; parse_config(format_config(c)) reproduces c.
std::string format_config(const ScenarioConfig& cfg);

/// Parses a real number, optionally written as a multiple or fraction of pi
/// ("pi/4", "0.5*pi", "-pi").
double parse_angle(std::string_view s);

}  // namespace pecsim
