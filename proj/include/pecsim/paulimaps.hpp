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

// Pauli-diagonal single-qubit maps and the mitigation coefficients built
// from them.
//
// Every map here has the form
//   M = q0 1(x)1 + q1 X(x)X + q2 Y*(x)Y + q3 Z(x)Z
// and is equivalently described by how it scales the X, Y and Z Bloch
// components (TransferEigenvalues). Composition, inversion, exp and log are
// componentwise on that representation.

#pragma once

#include <array>

#include "pecsim/numkernel.hpp"
#include "pecsim/superops.hpp"

namespace pecsim {

/// Per-step Pauli error probabilities of N(rho) = (1-sum) rho + lx X rho X + ...
struct PauliChannelParams {
  double lx = 0.0;
  double ly = 0.0;
  double lz = 0.0;

  /// Throws std::invalid_argument unless all entries are >= 0 and sum <= 1.
  void validate() const;
  double sum() const { return lx + ly + lz; }
};

/// Scaling factors of the X, Y, Z Bloch components; the trace is always kept.
struct TransferEigenvalues {
  double ex = 1.0;
  double ey = 1.0;
  double ez = 1.0;

  TransferEigenvalues reciprocal() const { return {1.0 / ex, 1.0 / ey, 1.0 / ez}; }
  TransferEigenvalues operator*(const TransferEigenvalues& o) const { return {ex * o.ex, ey * o.ey, ez * o.ez}; }
};

struct MitigationCoeffs {
  double q0 = 1.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  double sum() const { return q0 + q1 + q2 + q3; }
  /// Sampling overhead per step, q0 + |q1| + |q2| + |q3|.
  double one_norm() const;
  std::array<double, 4> as_array() const { return {q0, q1, q2, q3}; }
};

/// How to sample one mitigation layer: Pauli k (1..3) with probability mu[k-1],
/// identity otherwise; the classical weight is signs[k-1] * prefactor (or
/// +prefactor for the identity branch).
struct SamplingDistribution {
  std::array<double, 3> mu{0.0, 0.0, 0.0};
  double prefactor = 1.0;
  std::array<int, 3> signs{1, 1, 1};
  double bias = 1.0;

  double identity_probability() const { return 1.0 - mu[0] - mu[1] - mu[2]; }
  /// Expected signed weight of each branch (I, X, Y, Z) per layer.
  std::array<double, 4> expected_weights() const;
  /// Sum of expected_weights(): the trace factor of the implemented map.
  double trace_factor() const;
};

/// Superoperator w0 1(x)1 + w1 X(x)X + w2 Y*(x)Y + w3 Z(x)Z.
Superoperator pauli_diagonal_superop(const std::array<double, 4>& w);

Superoperator channel_superop(const PauliChannelParams& p);

TransferEigenvalues lambda_to_transfer(const PauliChannelParams& p);
MitigationCoeffs transfer_to_coeffs(const TransferEigenvalues& e);
TransferEigenvalues coeffs_to_transfer(const MitigationCoeffs& q);
/// Transfer eigenvalues of exp(pauli_dissipator(r) * dt).
TransferEigenvalues rates_to_transfer(const PauliRates& r, double dt);

/// Exact inverse of the channel. Throws std::domain_error if singular.
MitigationCoeffs exact_inverse_coeffs(const PauliChannelParams& p);

/// Coefficients of exp((L_target - L_device) dt) in closed form.
MitigationCoeffs general_exact_coeffs(const PauliRates& target, const PauliRates& device, double dt);

/// First-order map q'_k = target_k dt - device_eps_k, q'_0 = 1 - sum_k q'_k.
/// device_eps is lambda for digital hardware and kappa * dt for analog hardware.
MitigationCoeffs first_order_coeffs(const PauliRates& target, const std::array<double, 3>& device_eps, double dt);

/// Inverse of the first-order expansion of exp(L_device dt).
MitigationCoeffs linear_inverse_coeffs(const PauliRates& device, double dt);

enum class KappaMode { exact, first_order };

/// Device rates whose exp(L dt) reproduces the channel. Exact mode requires a
/// weak channel (sum of lambdas <= 1/2) and throws std::domain_error otherwise.
PauliRates lambda_to_kappa(const PauliChannelParams& p, double dt, KappaMode mode = KappaMode::exact);
PauliChannelParams kappa_to_lambda(const PauliRates& r, double dt);

Superoperator coeffs_to_superop(const MitigationCoeffs& q);

/// Throws std::invalid_argument if bias <= 0, q0 <= 0, sum(q) != 1 or the
/// biased probabilities exceed 1.
SamplingDistribution sampling_distribution(const MitigationCoeffs& q, double bias = 1.0);

/// The map realized on average by sampling `dist`; equals coeffs_to_superop(q)
/// when bias == 1.
Superoperator effective_superop(const SamplingDistribution& dist);

}  // namespace pecsim
