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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pecsim/superops.hpp"

using namespace pecsim;
using std::numbers::pi;

TEST_CASE("Hamiltonian matrix") {
  for (double beta : {0.0, pi / 4, pi / 2, 1.3}) {
    const Hamiltonian h = hamiltonian(0.8, beta);
    CHECK(oracle::max_diff(h.matrix, oracle::hamiltonian(0.8, beta)) < 1e-15);
    CHECK(oracle::max_diff(h.matrix, h.matrix.adjoint()) == 0.0);
  }
  CHECK(oracle::max_diff(hamiltonian(1.0, pi / 2).matrix, pauli::X()) < 1e-15);
  CHECK(oracle::max_diff(hamiltonian(1.0, 0.0).matrix, -1.0 * pauli::Y()) < 1e-15);
}

TEST_CASE("unitary generator matches the commutator action") {
  for (double beta : {0.0, pi / 4, pi / 2, 2.1}) {
    const Generator g = unitary_generator(hamiltonian(1.3, beta));
    CHECK(g.kind == GeneratorKind::hamiltonian);
    CHECK(oracle::max_diff(g.matrix, oracle::lh(1.3, beta)) < 1e-15);
  }
}

TEST_CASE("Pauli dissipator matches the Lindblad action") {
  const PauliRates r{0.3, 0.05, 0.2};
  const Generator g = pauli_dissipator(r);
  CHECK(g.kind == GeneratorKind::target_noise);
  CHECK(oracle::max_diff(g.matrix, oracle::ld({0.3, 0.05, 0.2})) < 1e-15);
  CHECK(pauli_dissipator(r, GeneratorKind::device_noise).kind == GeneratorKind::device_noise);
  CHECK_THROWS_AS(pauli_dissipator({-0.1, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(pauli_dissipator({std::nan(""), 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("dissipator decays Bloch components at 2(r_j + r_k)") {
  const PauliRates r{0.3, 0.05, 0.2};
  const double t = 0.9;
  std::mt19937_64 gen(1);
  const ComplexMatrix rho = oracle::random_density(gen);
  const ComplexMatrix out = exact_propagate(pauli_dissipator(r), rho, t);
  CHECK(oracle::bloch(out, 1) == doctest::Approx(std::exp(-2.0 * (r.y + r.z) * t) * oracle::bloch(rho, 1)).epsilon(1e-13));
  CHECK(oracle::bloch(out, 2) == doctest::Approx(std::exp(-2.0 * (r.x + r.z) * t) * oracle::bloch(rho, 2)).epsilon(1e-13));
  CHECK(oracle::bloch(out, 3) == doctest::Approx(std::exp(-2.0 * (r.x + r.y) * t) * oracle::bloch(rho, 3)).epsilon(1e-13));
}

TEST_CASE("combine adds disjoint parts only") {
  const Generator h = unitary_generator(hamiltonian(1.0, 0.3));
  const Generator d = pauli_dissipator({0.1, 0.0, 0.0});
  const Generator n = pauli_dissipator({0.1, 0.1, 0.1}, GeneratorKind::device_noise);
  const Generator hd = combine(h, d);
  CHECK(hd.kind == GeneratorKind::combined);
  CHECK(oracle::max_diff(hd.matrix, h.matrix + d.matrix) == 0.0);
  CHECK_NOTHROW(combine(hd, n));
  CHECK_THROWS_AS(combine(hd, h), std::invalid_argument);
  CHECK_THROWS_AS(combine(d, d), std::invalid_argument);
}

TEST_CASE("commutator norms") {
  const Generator h0 = unitary_generator(hamiltonian(1.0, 0.0));
  const Generator h2 = unitary_generator(hamiltonian(1.0, pi / 2));
  const Generator x = pauli_dissipator({0.3, 0.0, 0.0});
  const ComplexMatrix direct = oracle::mul(x.matrix, h0.matrix) - oracle::mul(h0.matrix, x.matrix);
  CHECK(oracle::max_diff(commutator(x, h0), direct) < 1e-15);
  // 0.3 * sqrt(32)
  CHECK(commutator_norm(x, h0) == doctest::Approx(1.697056274847714).epsilon(1e-12));
  CHECK(commutator_norm(x, h2) < 1e-15);
  const Generator depol = pauli_dissipator({0.1, 0.1, 0.1});
  for (double beta : {0.0, 0.4, pi / 4, pi / 2}) {
    CHECK(commutator_norm(depol, unitary_generator(hamiltonian(1.0, beta))) < 1e-15);
  }
}

TEST_CASE("closed evolution reproduces Rabi oscillation") {
  for (double beta : {0.0, pi / 4, pi / 2}) {
    const Generator g = unitary_generator(hamiltonian(1.0, beta));
    for (double t : {0.0, 0.5, 1.7, 6.0}) {
      const ComplexMatrix r = exact_propagate(g, excited_state(), t);
      CHECK(std::abs(r(0, 0).real() - oracle::closed(1.0, t)) < 1e-13);
    }
  }
}

TEST_CASE("exact propagation preserves trace and positivity") {
  std::mt19937_64 gen(2);
  const Generator g = combine(unitary_generator(hamiltonian(1.0, 0.7)), pauli_dissipator({0.4, 0.1, 0.1}));
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix rho = oracle::random_density(gen);
    const ComplexMatrix out = exact_propagate(g, rho, 0.1 + trial * 0.3);
    CHECK(std::abs(out.trace() - 1.0) < 1e-13);
    CHECK_NOTHROW(require_physical(out));
  }
}

TEST_CASE("exact propagation input checks") {
  const Generator g = unitary_generator(hamiltonian(1.0, 0.0));
  CHECK_THROWS_AS(exact_propagate(g, excited_state(), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(exact_propagate(g, ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(exact_propagate(g, ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(exact_propagate(g, ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}, 1.0), std::invalid_argument);
  CHECK(exact_propagate(g, excited_state(), 0.0) == excited_state());
}
