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

#include "pecsim/paulimaps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pecsim {

namespace {

constexpr double kSingularTol = 1e-12;
constexpr double kCoeffSumTol = 1e-10;

void require_positive_dt(double dt, const char* where) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument(std::string(where) + ": dt must be > 0");
}

void require_unit_sum(const MitigationCoeffs& q, const char* where) {
  if (std::abs(q.sum() - 1.0) > kCoeffSumTol) {
    throw std::invalid_argument(std::string(where) + ": coefficients must sum to 1 (got " + std::to_string(q.sum()) +
                                ")");
  }
}

}  // namespace

void PauliChannelParams::validate() const {
  for (double l : {lx, ly, lz}) {
    if (!std::isfinite(l) || l < 0.0) throw std::invalid_argument("PauliChannelParams: probabilities must be >= 0");
  }
  if (sum() > 1.0) throw std::invalid_argument("PauliChannelParams: lx + ly + lz must be <= 1");
}

double MitigationCoeffs::one_norm() const { return q0 + std::abs(q1) + std::abs(q2) + std::abs(q3); }

std::array<double, 4> SamplingDistribution::expected_weights() const {
  return {prefactor * identity_probability(), prefactor * signs[0] * mu[0], prefactor * signs[1] * mu[1],
          prefactor * signs[2] * mu[2]};
}

double SamplingDistribution::trace_factor() const {
  const auto w = expected_weights();
  return w[0] + w[1] + w[2] + w[3];
}

Superoperator pauli_diagonal_superop(const std::array<double, 4>& w) {
  Superoperator m = ComplexMatrix::zeros(4, 4);
  for (int k = 0; k < 4; ++k) {
    if (w[k] == 0.0) continue;
    const ComplexMatrix& p = pauli::by_index(k);
    m += kron(p.conjugate(), p) * w[k];
  }
  return m;
}

Superoperator channel_superop(const PauliChannelParams& p) {
  p.validate();
  return pauli_diagonal_superop({1.0 - p.sum(), p.lx, p.ly, p.lz});
}

TransferEigenvalues lambda_to_transfer(const PauliChannelParams& p) {
  return {1.0 - 2.0 * p.ly - 2.0 * p.lz, 1.0 - 2.0 * p.lx - 2.0 * p.lz, 1.0 - 2.0 * p.lx - 2.0 * p.ly};
}

MitigationCoeffs transfer_to_coeffs(const TransferEigenvalues& e) {
  return {0.25 * (1.0 + e.ex + e.ey + e.ez), 0.25 * (1.0 + e.ex - e.ey - e.ez), 0.25 * (1.0 - e.ex + e.ey - e.ez),
          0.25 * (1.0 - e.ex - e.ey + e.ez)};
}

TransferEigenvalues coeffs_to_transfer(const MitigationCoeffs& q) {
  return {q.q0 + q.q1 - q.q2 - q.q3, q.q0 - q.q1 + q.q2 - q.q3, q.q0 - q.q1 - q.q2 + q.q3};
}

TransferEigenvalues rates_to_transfer(const PauliRates& r, double dt) {
  return {std::exp(-2.0 * (r.y + r.z) * dt), std::exp(-2.0 * (r.x + r.z) * dt), std::exp(-2.0 * (r.x + r.y) * dt)};
}

MitigationCoeffs exact_inverse_coeffs(const PauliChannelParams& p) {
  p.validate();
  const TransferEigenvalues e = lambda_to_transfer(p);
  for (double v : {e.ex, e.ey, e.ez}) {
    if (std::abs(v) < kSingularTol) throw std::domain_error("exact_inverse_coeffs: channel is not invertible");
  }
  return transfer_to_coeffs(e.reciprocal());
}

MitigationCoeffs general_exact_coeffs(const PauliRates& target, const PauliRates& device, double dt) {
  target.validate();
  device.validate();
  require_positive_dt(dt, "general_exact_coeffs");
  // Net rates kappa_k - gamma_k removed by the map, scaled by 2 dt.
  const double a1 = 2.0 * (device.x - target.x) * dt;
  const double a2 = 2.0 * (device.y - target.y) * dt;
  const double a3 = 2.0 * (device.z - target.z) * dt;
  const double total = std::exp(a1 + a2 + a3);
  const double e1 = std::exp(-a1);
  const double e2 = std::exp(-a2);
  const double e3 = std::exp(-a3);
  MitigationCoeffs q;
  q.q0 = 0.25 * (1.0 + std::exp(a1 + a2) + std::exp(a3 + a1) + std::exp(a2 + a3));
  q.q1 = 0.25 * (1.0 - total * (-e1 + e2 + e3));
  q.q2 = 0.25 * (1.0 - total * (e1 - e2 + e3));
  q.q3 = 0.25 * (1.0 - total * (e1 + e2 - e3));
  return q;
}

MitigationCoeffs first_order_coeffs(const PauliRates& target, const std::array<double, 3>& device_eps, double dt) {
  target.validate();
  require_positive_dt(dt, "first_order_coeffs");
  MitigationCoeffs q;
  q.q1 = target.x * dt - device_eps[0];
  q.q2 = target.y * dt - device_eps[1];
  q.q3 = target.z * dt - device_eps[2];
  q.q0 = 1.0 - q.q1 - q.q2 - q.q3;
  return q;
}

MitigationCoeffs linear_inverse_coeffs(const PauliRates& device, double dt) {
  device.validate();
  require_positive_dt(dt, "linear_inverse_coeffs");
  return exact_inverse_coeffs({device.x * dt, device.y * dt, device.z * dt});
}

PauliRates lambda_to_kappa(const PauliChannelParams& p, double dt, KappaMode mode) {
  p.validate();
  require_positive_dt(dt, "lambda_to_kappa");
  if (mode == KappaMode::first_order) return {p.lx / dt, p.ly / dt, p.lz / dt};

  if (p.sum() > 0.5) throw std::domain_error("lambda_to_kappa: channel is not weak (lx + ly + lz > 1/2)");
  const TransferEigenvalues e = lambda_to_transfer(p);
  if (e.ex <= 0.0 || e.ey <= 0.0 || e.ez <= 0.0) {
    throw std::domain_error("lambda_to_kappa: channel has a non-positive transfer eigenvalue");
  }
  const double scale = 1.0 / (4.0 * dt);
  PauliRates r{scale * std::log(e.ex / (e.ez * e.ey)), scale * std::log(e.ey / (e.ez * e.ex)),
               scale * std::log(e.ez / (e.ey * e.ex))};
  // Exact zeros in lambda can leave -1e-17 residue from the logarithms.
  for (double* k : {&r.x, &r.y, &r.z}) {
    if (*k < 0.0 && *k > -1e-14) *k = 0.0;
  }
  if (r.x < 0.0 || r.y < 0.0 || r.z < 0.0) {
    throw std::domain_error("lambda_to_kappa: channel is not generated by non-negative Pauli rates");
  }
  return r;
}

PauliChannelParams kappa_to_lambda(const PauliRates& r, double dt) {
  r.validate();
  require_positive_dt(dt, "kappa_to_lambda");
  const MitigationCoeffs q = transfer_to_coeffs(rates_to_transfer(r, dt));
  return {q.q1, q.q2, q.q3};
}

Superoperator coeffs_to_superop(const MitigationCoeffs& q) {
  require_unit_sum(q, "coeffs_to_superop");
  return pauli_diagonal_superop(q.as_array());
}

SamplingDistribution sampling_distribution(const MitigationCoeffs& q, double bias) {
  if (!(bias > 0.0) || !std::isfinite(bias)) throw std::invalid_argument("sampling_distribution: bias must be > 0");
  require_unit_sum(q, "sampling_distribution");
  if (!(q.q0 > 0.0)) throw std::invalid_argument("sampling_distribution: q0 must be > 0");

  SamplingDistribution d;
  d.bias = bias;
  d.prefactor = q.one_norm();
  const double qs[3] = {q.q1, q.q2, q.q3};
  for (int k = 0; k < 3; ++k) {
    d.mu[k] = bias * std::abs(qs[k]) / d.prefactor;
    d.signs[k] = qs[k] < 0.0 ? -1 : 1;
  }
  if (d.identity_probability() < 0.0) {
    throw std::invalid_argument("sampling_distribution: bias pushes the Pauli probabilities above 1");
  }
  return d;
}

Superoperator effective_superop(const SamplingDistribution& dist) {
  return pauli_diagonal_superop(dist.expected_weights());
}

}  // namespace pecsim
