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

#include "pecsim/superops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pecsim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;

std::uint8_t bit(GeneratorKind k) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k)); }

}  // namespace

void PauliRates::validate() const {
  for (double r : {x, y, z}) {
    if (!std::isfinite(r) || r < 0.0) {
      throw std::invalid_argument("PauliRates: rates must be finite and non-negative");
    }
  }
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::hamiltonian: return "hamiltonian";
    case GeneratorKind::target_noise: return "target-noise";
    case GeneratorKind::device_noise: return "device-noise";
    case GeneratorKind::combined: return "combined";
  }
  return "unknown";
}

Hamiltonian hamiltonian(double omega, double beta) {
  ComplexMatrix m = pauli::X() * std::sin(beta) - pauli::Y() * std::cos(beta);
  m *= omega;
  return {omega, beta, std::move(m)};
}

Generator unitary_generator(const Hamiltonian& h) {
  const ComplexMatrix& eye = pauli::I();
  ComplexMatrix l = (kron(eye, h.matrix) - kron(h.matrix.transpose(), eye)) * Complex{0.0, -1.0};
  return {std::move(l), GeneratorKind::hamiltonian, bit(GeneratorKind::hamiltonian)};
}

Generator pauli_dissipator(const PauliRates& rates, GeneratorKind kind) {
  rates.validate();
  if (kind != GeneratorKind::target_noise && kind != GeneratorKind::device_noise) {
    throw std::invalid_argument("pauli_dissipator: kind must be target-noise or device-noise");
  }
  const ComplexMatrix eye4 = ComplexMatrix::identity(4);
  ComplexMatrix l = ComplexMatrix::zeros(4, 4);
  const double r[3] = {rates.x, rates.y, rates.z};
  for (int k = 1; k <= 3; ++k) {
    if (r[k - 1] == 0.0) continue;
    const ComplexMatrix& p = pauli::by_index(k);
    l += (kron(p.conjugate(), p) - eye4) * r[k - 1];
  }
  return {std::move(l), kind, bit(kind)};
}

Generator combine(const Generator& a, const Generator& b) {
  if ((a.parts & b.parts) != 0) {
    throw std::invalid_argument("combine: both generators contain a " + to_string(a.kind == GeneratorKind::combined ? b.kind : a.kind) +
                                " contribution");
  }
  return {a.matrix + b.matrix, GeneratorKind::combined, static_cast<std::uint8_t>(a.parts | b.parts)};
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix commutator(const Generator& a, const Generator& b) { return commutator(a.matrix, b.matrix); }

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(commutator(a, b)); }

double commutator_norm(const Generator& a, const Generator& b) { return commutator_norm(a.matrix, b.matrix); }

void require_physical(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("density matrix must be 2x2");
  if (!all_finite(rho)) throw std::invalid_argument("density matrix has non-finite entries");
  if (max_abs_diff(rho, rho.adjoint()) > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) throw std::invalid_argument("density matrix trace is not 1");
  // 2x2 Hermitian: eigenvalues (t +/- sqrt(t^2 - 4 det)) / 2.
  const double t = tr.real();
  const double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det));
  if (0.5 * (t - disc) < kEigenvalueFloor) throw std::invalid_argument("density matrix is not positive semidefinite");
}

ComplexMatrix exact_propagate(const Generator& g, const ComplexMatrix& rho0, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("exact_propagate: t must be >= 0");
  require_physical(rho0);
  if (t == 0.0) return rho0;
  return devectorize(apply_superop(expm(g.matrix * t), vectorize(rho0)));
}

ComplexMatrix excited_state() { return ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}; }

}  // namespace pecsim
