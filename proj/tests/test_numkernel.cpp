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

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pecsim/numkernel.hpp"

using namespace pecsim;

TEST_CASE("expm agrees with a long Taylor series") {
  std::mt19937_64 gen(7);
  for (std::size_t n : {2u, 4u}) {
    for (double scale : {0.01, 0.4, 1.0, 3.0}) {
      for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(gen, n, scale);
        const ComplexMatrix ref = oracle::taylor_expm(a);
        CHECK(oracle::max_diff(expm(a), ref) <= 1e-13 * std::max(1.0, oracle::one_norm(ref)));
      }
    }
  }
}

TEST_CASE("expm of a unitary generator inverts to the identity") {
  std::mt19937_64 gen(11);
  for (double scale : {0.5, 2.0, 5.0, 10.0}) {
    for (int trial = 0; trial < 20; ++trial) {
      ComplexMatrix a = oracle::random_matrix(gen, 4, scale);
      a = 0.5 * (a - a.adjoint());
      const ComplexMatrix prod = expm(a) * expm(-a);
      CHECK(max_abs_diff(prod, ComplexMatrix::identity(4)) <= 1e-11);
    }
  }
}

TEST_CASE("expm closed forms") {
  CHECK(expm(ComplexMatrix::zeros(4, 4)) == ComplexMatrix::identity(4));
  const ComplexMatrix d = ComplexMatrix::diagonal({Complex(-1.5, 0.0), Complex(0.0, 2.0)});
  const ComplexMatrix e = expm(d);
  CHECK(std::abs(e(0, 0) - std::exp(Complex(-1.5, 0.0))) < 1e-15);
  CHECK(std::abs(e(1, 1) - std::exp(Complex(0.0, 2.0))) < 1e-15);
  CHECK(std::abs(e(0, 1)) == 0.0);
  // exp(-i theta X) = cos theta I - i sin theta X
  const double th = 0.7;
  const ComplexMatrix r = expm(Complex(0.0, -th) * pauli::X());
  CHECK(std::abs(r(0, 0) - std::cos(th)) < 1e-15);
  CHECK(std::abs(r(0, 1) - Complex(0.0, -std::sin(th))) < 1e-15);
  CHECK_THROWS_AS(expm(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("vectorization is column-stacked") {
  const ComplexMatrix rho{{1.0, 2.0}, {3.0, 4.0}};
  const StateVector4 v = vectorize(rho);
  CHECK(v[0] == Complex(1.0));
  CHECK(v[1] == Complex(3.0));
  CHECK(v[2] == Complex(2.0));
  CHECK(v[3] == Complex(4.0));
  CHECK(devectorize(v) == rho);
}

TEST_CASE("vec(A rho B) = (B^T kron A) vec(rho)") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = oracle::random_matrix(gen, 2, 1.0);
    const ComplexMatrix b = oracle::random_matrix(gen, 2, 1.0);
    const ComplexMatrix rho = oracle::random_matrix(gen, 2, 1.0);
    const StateVector4 lhs = vectorize(oracle::mul(oracle::mul(a, rho), b));
    const StateVector4 rhs = apply_superop(kron(b.transpose(), a), vectorize(rho));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-14);
  }
}

TEST_CASE("kron mixed product") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_matrix(gen, 2, 1.0), b = oracle::random_matrix(gen, 2, 1.0);
    const auto c = oracle::random_matrix(gen, 2, 1.0), d = oracle::random_matrix(gen, 2, 1.0);
    CHECK(oracle::max_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-14);
  }
  const ComplexMatrix k = kron(pauli::Z(), pauli::X());
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(2, 3) == Complex(-1.0));
  CHECK(k(0, 2) == Complex(0.0));
}

TEST_CASE("matrix arithmetic matches the naive oracle") {
  std::mt19937_64 gen(9);
  const auto a = oracle::random_matrix(gen, 4, 2.0), b = oracle::random_matrix(gen, 4, 2.0);
  CHECK(oracle::max_diff(a * b, oracle::mul(a, b)) < 1e-15);
  CHECK(std::abs((a + b).trace() - (a.trace() + b.trace())) < 1e-14);
  CHECK(max_abs_diff(a.adjoint().adjoint(), a) == 0.0);
  CHECK(max_abs_diff(a.transpose().conjugate(), a.adjoint()) == 0.0);
  CHECK(std::abs(frobenius_norm(ComplexMatrix::identity(4)) - 2.0) < 1e-15);
  CHECK_THROWS_AS(max_abs_diff(a, ComplexMatrix(2, 2)), std::invalid_argument);
  CHECK_THROWS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3));
}

TEST_CASE("Pauli algebra") {
  const Complex i(0.0, 1.0);
  CHECK(pauli::X() * pauli::Y() == i * pauli::Z());
  CHECK(pauli::Y() * pauli::Z() == i * pauli::X());
  CHECK(pauli::Z() * pauli::X() == i * pauli::Y());
  for (int k = 0; k < 4; ++k) {
    CHECK(pauli::by_index(k) * pauli::by_index(k) == ComplexMatrix::identity(2));
    CHECK(pauli::by_index(k) == oracle::sigma(k));
  }
  CHECK_THROWS(pauli::by_index(4));
}

TEST_CASE("all_finite flags NaN") {
  ComplexMatrix a = ComplexMatrix::identity(2);
  CHECK(all_finite(a));
  a(1, 0) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(all_finite(a));
}
