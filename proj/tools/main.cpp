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

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pecsim/commands.hpp"
#include "pecsim/presets.hpp"

namespace {

void print_manifest(const pecsim::RunManifest& m) {
  for (const auto& e : m.entries) {
    for (const auto& o : e.outputs) std::cout << "wrote " << o << "\n";
    for (const auto& w : e.warnings) std::cerr << "warning: " << e.name << ": " << w << "\n";
  }
  std::printf("done in %.2f s\n", m.wall_clock_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pecsim: step-wise probabilistic error cancellation for a driven qubit"};
  app.set_version_flag("--version", pecsim::artifact_version());
  app.require_subcommand(1);

  pecsim::RunOverrides overrides;
  pecsim::OutputOptions out;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool writes) {
    sub->add_option("--samples", samples, "Monte Carlo trajectories per series (0 disables sampling)");
    sub->add_option("--seed", seed, "Base RNG seed");
    sub->add_option("--set", overrides.assignments, "Override a config key, key=value (repeatable)");
    if (writes) {
      sub->add_option("--output,-o", out.output_dir, "Output directory")->capture_default_str();
      sub->add_flag("--svg", out.svg, "Also write an SVG chart per series");
    }
  };

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Reproduce a preset figure");
  figure->add_option("id", figure_id, "Preset id")->required()->check(CLI::IsMember(pecsim::preset_ids()));
  add_common(figure, true);

  auto* list = app.add_subcommand("list", "List preset ids");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a scenario from a config file");
  run->add_option("--config,-c", config_path, "Config file")->required()->check(CLI::ExistingFile);
  add_common(run, true);

  auto* diag = app.add_subcommand("diagnose", "Print commutators, Trotter error and sampling overhead");
  diag->add_option("--config,-c", config_path, "Config file")->required()->check(CLI::ExistingFile);
  add_common(diag, false);

  CLI11_PARSE(app, argc, argv);

  auto collect = [&](CLI::App* sub) {
    if (sub->count("--samples")) overrides.samples = samples;
    if (sub->count("--seed")) overrides.seed = seed;
  };

  try {
    if (*list) {
      for (const auto& id : pecsim::preset_ids()) {
        std::cout << id << "  " << pecsim::make_preset(id).description << "\n";
      }
    } else if (*figure) {
      collect(figure);
      print_manifest(pecsim::cmd_figure(figure_id, overrides, out));
    } else if (*run) {
      collect(run);
      print_manifest(pecsim::cmd_run(config_path, overrides, out));
    } else if (*diag) {
      collect(diag);
      std::cout << pecsim::cmd_diagnose(config_path, overrides);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
