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

#include "pecsim/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace pecsim {

namespace {

constexpr std::size_t kBlockSize = 4096;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Neumaier summation.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Running statistics for one step over a block of trajectories.
struct StepAccumulator {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  std::array<CompensatedSum, 8> state;  // re/im of the 4 vectorized entries

  void push(double weight, const StateVector4& v) {
    const double x = weight * v[0].real();
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
    for (int i = 0; i < 4; ++i) {
      state[2 * i].add(weight * v[i].real());
      state[2 * i + 1].add(weight * v[i].imag());
    }
  }

  // Chan et al. pairwise combination; `other` is appended after *this.
  void merge(const StepAccumulator& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    const double delta = other.mean - mean;
    mean += delta * nb / n;
    m2 += other.m2 + delta * delta * na * nb / n;
    count += other.count;
    for (int i = 0; i < 8; ++i) state[i].add(other.state[i].value());
  }
};

// Precomputed per-branch step maps B_k = (P_k^* (x) P_k) C and their weights.
struct BranchTable {
  std::array<Superoperator, 4> ops;
  std::array<double, 4> probability{};
  std::array<double, 4> weight_factor{};

  explicit BranchTable(const StepPlan& plan) {
    const Superoperator noisy = plan.noisy_step();
    const SamplingDistribution& d = plan.sampling;
    for (int k = 0; k < 4; ++k) {
      const ComplexMatrix& p = pauli::by_index(k);
      ops[k] = k == 0 ? noisy : kron(p.conjugate(), p) * noisy;
      probability[k] = k == 0 ? d.identity_probability() : d.mu[k - 1];
      weight_factor[k] = k == 0 ? d.prefactor : d.signs[k - 1] * d.prefactor;
    }
  }

  int select(double u) const {
    double acc = probability[0];
    if (u < acc) return 0;
    for (int k = 1; k < 3; ++k) {
      acc += probability[k];
      if (u < acc) return k;
    }
    return probability[3] > 0.0 ? 3 : (probability[2] > 0.0 ? 2 : (probability[1] > 0.0 ? 1 : 0));
  }
};

void require_plan(const StepPlan& plan) {
  if (plan.steps < 0) throw std::invalid_argument("StepPlan: steps must be >= 0");
  if (plan.physical_layers.empty()) throw std::invalid_argument("StepPlan: no physical layers");
  if (plan.initial_state.rows() != 2 || plan.initial_state.cols() != 2) {
    throw std::invalid_argument("StepPlan: initial state must be 2x2");
  }
}

template <typename Visitor>
void walk(const BranchTable& table, const StepPlan& plan, RandomStream& rng, Visitor&& visit) {
  StateVector4 v = vectorize(plan.initial_state);
  double weight = 1.0;
  visit(0, weight, v);
  for (int n = 1; n <= plan.steps; ++n) {
    const int k = table.select(rng.uniform());
    v = apply_superop(table.ops[k], v);
    weight *= table.weight_factor[k];
    visit(n, weight, v);
  }
}

}  // namespace

Superoperator StepPlan::noisy_step() const {
  if (physical_layers.empty()) throw std::invalid_argument("StepPlan: no physical layers");
  Superoperator m = physical_layers.front();
  for (std::size_t i = 1; i < physical_layers.size(); ++i) m = physical_layers[i] * m;
  return m;
}

Superoperator StepPlan::mitigation_map() const { return effective_superop(sampling); }

Superoperator StepPlan::step_superop() const { return mitigation_map() * noisy_step(); }

RandomStream RandomStream::for_trajectory(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(mix64(seed) ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

std::uint64_t RandomStream::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double RandomStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<WeightedTrajectory> run_trajectory(const StepPlan& plan, RandomStream& rng) {
  require_plan(plan);
  const BranchTable table(plan);
  std::vector<WeightedTrajectory> out;
  out.reserve(static_cast<std::size_t>(plan.steps) + 1);
  walk(table, plan, rng, [&](int, double w, const StateVector4& v) { out.push_back({devectorize(v), w}); });
  return out;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("PECSIM_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EnsembleStats run_ensemble(const StepPlan& plan, std::size_t samples, std::uint64_t seed, unsigned workers) {
  require_plan(plan);
  if (samples == 0) throw std::invalid_argument("run_ensemble: samples must be >= 1");
  const BranchTable table(plan);
  const std::size_t n_steps = static_cast<std::size_t>(plan.steps) + 1;
  const std::size_t n_blocks = (samples + kBlockSize - 1) / kBlockSize;

  std::vector<std::vector<StepAccumulator>> partials(n_blocks);
  std::atomic<std::size_t> next_block{0};
  auto worker = [&]() {
    for (std::size_t b = next_block++; b < n_blocks; b = next_block++) {
      std::vector<StepAccumulator> acc(n_steps);
      const std::size_t begin = b * kBlockSize;
      const std::size_t end = std::min(samples, begin + kBlockSize);
      for (std::size_t i = begin; i < end; ++i) {
        RandomStream rng = RandomStream::for_trajectory(seed, i);
        walk(table, plan, rng, [&](int n, double w, const StateVector4& v) { acc[n].push(w, v); });
      }
      partials[b] = std::move(acc);
    }
  };

  if (workers == 0) workers = default_worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_blocks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<StepAccumulator> total(n_steps);
  for (const auto& block : partials) {
    for (std::size_t n = 0; n < n_steps; ++n) total[n].merge(block[n]);
  }

  EnsembleStats stats;
  stats.steps.reserve(n_steps);
  for (const auto& acc : total) {
    StepStats s;
    s.count = acc.count;
    s.mean = acc.mean;
    s.stddev = acc.count > 1 ? std::sqrt(acc.m2 / static_cast<double>(acc.count - 1)) : 0.0;
    s.stderr_mean = s.stddev / std::sqrt(static_cast<double>(acc.count));
    StateVector4 v;
    const double inv = 1.0 / static_cast<double>(acc.count);
    for (int i = 0; i < 4; ++i) v[i] = Complex{acc.state[2 * i].value() * inv, acc.state[2 * i + 1].value() * inv};
    s.mean_state = devectorize(v);
    stats.steps.push_back(std::move(s));
  }
  return stats;
}

ExhaustiveResult exhaustive_expectation(const StepPlan& plan, int steps) {
  require_plan(plan);
  if (steps < 0) steps = plan.steps;
  if (steps > kMaxExhaustiveSteps) {
    throw std::invalid_argument("exhaustive_expectation: at most " + std::to_string(kMaxExhaustiveSteps) +
                                " steps can be enumerated (got " + std::to_string(steps) + ")");
  }
  const BranchTable table(plan);
  const std::size_t n_steps = static_cast<std::size_t>(steps) + 1;
  std::vector<CompensatedSum> mean(n_steps), weight(n_steps);
  std::vector<std::array<CompensatedSum, 8>> state(n_steps);

  auto record = [&](int n, double pw, const StateVector4& v) {
    mean[n].add(pw * v[0].real());
    weight[n].add(pw);
    for (int i = 0; i < 4; ++i) {
      state[n][2 * i].add(pw * v[i].real());
      state[n][2 * i + 1].add(pw * v[i].imag());
    }
  };

  // pw = (branch probability) * (signed weight) accumulated along the path.
  auto descend = [&](auto&& self, int depth, double pw, const StateVector4& v) -> void {
    record(depth, pw, v);
    if (depth == steps) return;
    for (int k = 0; k < 4; ++k) {
      self(self, depth + 1, pw * table.probability[k] * table.weight_factor[k], apply_superop(table.ops[k], v));
    }
  };
  descend(descend, 0, 1.0, vectorize(plan.initial_state));

  ExhaustiveResult r;
  for (std::size_t n = 0; n < n_steps; ++n) {
    r.mean.push_back(mean[n].value());
    r.weight_sum.push_back(weight[n].value());
    StateVector4 v;
    for (int i = 0; i < 4; ++i) v[i] = Complex{state[n][2 * i].value(), state[n][2 * i + 1].value()};
    r.mean_state.push_back(devectorize(v));
  }
  return r;
}

}  // namespace pecsim
