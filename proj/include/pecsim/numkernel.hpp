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

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pecsim {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sizes used in practice are 2x2 (states,
/// Hamiltonians, Pauli operators) and 4x4 (superoperators).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer: ComplexMatrix{{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Column-stacked 2x2 density matrix: component 2*j + i holds entry (i, j).
using StateVector4 = std::array<Complex, 4>;

/// 4x4 matrix acting on a StateVector4 from the left.
using Superoperator = ComplexMatrix;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential by scaling and squaring around a degree-18 Taylor core.
/// Throws std::invalid_argument for non-square input.
ComplexMatrix expm(const ComplexMatrix& a);

StateVector4 vectorize(const ComplexMatrix& rho);
ComplexMatrix devectorize(const StateVector4& v);

/// y = m * v for a 4x4 m.
StateVector4 apply_superop(const Superoperator& m, const StateVector4& v);

double frobenius_norm(const ComplexMatrix& a);
/// Largest entrywise |a - b|. Throws std::invalid_argument on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& a);

namespace pauli {
// Basis order |1> = (1,0)^T, |0> = (0,1)^T.
const ComplexMatrix& I();
const ComplexMatrix& X();
const ComplexMatrix& Y();
const ComplexMatrix& Z();
/// k = 0..3 -> I, X, Y, Z.
const ComplexMatrix& by_index(int k);
}  // namespace pauli

}  // namespace pecsim
