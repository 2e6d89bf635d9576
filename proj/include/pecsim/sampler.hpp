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
#include <vector>

#include "pecsim/numkernel.hpp"
#include "pecsim/paulimaps.hpp"

namespace pecsim {

/// One time step of a stepwise-mitigated simulation, repeated `steps` times.
///
/// Each step applies the physical layers in order (digital: unitary then
/// device channel; analog: the joint propagator) followed by the mitigation
/// layer, which is sampled from `sampling` or applied as its expected map.
struct StepPlan {
  std::vector<Superoperator> physical_layers;
  MitigationCoeffs coeffs;
  SamplingDistribution sampling;
  int steps = 0;
  ComplexMatrix initial_state;

  /// Product of the physical layers (last layer leftmost).
  Superoperator noisy_step() const;
  /// Expected mitigation map, effective_superop(sampling).
  Superoperator mitigation_map() const;
  /// mitigation_map() * noisy_step().
  Superoperator step_superop() const;
};

/// SplitMix64 stream. Each trajectory gets its own stream derived from
/// (seed, trajectory index) so ensembles do not depend on the worker count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t state) : state_(state) {}
  static RandomStream for_trajectory(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

struct WeightedTrajectory {
  ComplexMatrix state;
  double weight = 1.0;
};

/// Per-step snapshots of one sampled trajectory, index 0 being the initial
/// state with weight 1.
std::vector<WeightedTrajectory> run_trajectory(const StepPlan& plan, RandomStream& rng);

struct StepStats {
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation of weight * <1|rho|1>.
  double stddev = 0.0;
  /// stddev / sqrt(count).
  double stderr_mean = 0.0;
  /// Weighted mean of the full density matrix.
  ComplexMatrix mean_state;
};

struct EnsembleStats {
  std::vector<StepStats> steps;  // index 0 = initial state
};

/// Worker threads used by run_ensemble when `workers` is 0: the PECSIM_WORKERS
/// environment variable if set, otherwise the hardware concurrency.
unsigned default_worker_count();

/// Sample `samples` independent trajectories. Output is bit-identical for a
/// given (plan, samples, seed) regardless of `workers`.
EnsembleStats run_ensemble(const StepPlan& plan, std::size_t samples, std::uint64_t seed, unsigned workers = 0);

struct ExhaustiveResult {
  std::vector<double> mean;                // weighted <1|rho|1> per step
  std::vector<ComplexMatrix> mean_state;  // weighted rho per step
  std::vector<double> weight_sum;          // sum over branches of probability * weight
};

inline constexpr int kMaxExhaustiveSteps = 6;

/// Exact infinite-sample expectation by enumerating all 4^n branch sequences.
/// Uses plan.steps unless `steps` >= 0. Throws std::invalid_argument above 6 steps.
ExhaustiveResult exhaustive_expectation(const StepPlan& plan, int steps = -1);

}  // namespace pecsim
