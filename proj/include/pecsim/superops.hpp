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

#include <cstdint>
#include <string>

#include "pecsim/numkernel.hpp"

namespace pecsim {

/// H = omega (sin(beta) X - cos(beta) Y). Eigenvalues are +/- omega.
struct Hamiltonian {
  double omega = 0.0;
  double beta = 0.0;
  ComplexMatrix matrix;
};

/// Rates of the X, Y and Z Pauli dissipators (inverse time).
struct PauliRates {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// Throws std::invalid_argument if any rate is negative or non-finite.
  void validate() const;
  bool is_zero() const { return x == 0.0 && y == 0.0 && z == 0.0; }
  PauliRates operator-(const PauliRates& o) const { return {x - o.x, y - o.y, z - o.z}; }
  bool operator==(const PauliRates&) const = default;
};

enum class GeneratorKind : std::uint8_t { hamiltonian, target_noise, device_noise, combined };

std::string to_string(GeneratorKind kind);

/// A 4x4 Lindblad generator acting on column-stacked states.
///
/// `parts` records which elementary generators were summed into it, so that
/// combine() can refuse e.g. two device-noise contributions in one step.
struct Generator {
  ComplexMatrix matrix;
  GeneratorKind kind = GeneratorKind::combined;
  std::uint8_t parts = 0;
};

Hamiltonian hamiltonian(double omega, double beta);

/// L_h = -i (1 (x) H - H^T (x) 1).
Generator unitary_generator(const Hamiltonian& h);

/// sum_k r_k (P_k^* (x) P_k - 1 (x) 1). Throws on negative rates.
Generator pauli_dissipator(const PauliRates& rates, GeneratorKind kind = GeneratorKind::target_noise);

/// Sum of two generators. Throws std::invalid_argument if both already
/// contain the same elementary kind.
Generator combine(const Generator& a, const Generator& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const Generator& a, const Generator& b);
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);
double commutator_norm(const Generator& a, const Generator& b);

/// Throws std::invalid_argument unless rho is 2x2, Hermitian, unit trace and
/// has eigenvalues >= -1e-10.
void require_physical(const ComplexMatrix& rho);

/// devectorize(expm(g.matrix * t) vectorize(rho0)). rho0 must be physical; t >= 0.
ComplexMatrix exact_propagate(const Generator& g, const ComplexMatrix& rho0, double t);

/// |1><1| in the (|1>, |0>) basis.
ComplexMatrix excited_state();

}  // namespace pecsim
