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

#include "pecsim/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pecsim {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
}

// Induced 1-norm; cheap and bounds the spectral radius.
double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

constexpr int kTaylorDegree = 18;
// Scaled norm bound for the Taylor core; remainder ~ 0.5^19 / 19! < 1e-22.
constexpr double kTaylorNormBound = 0.5;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix t = *this;
  for (auto& z : t.data_) z = std::conj(z);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const { return transpose().conjugate(); }

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  Complex s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("expm: matrix is not square");
  const std::size_t n = a.rows();
  const double norm = one_norm(a);
  if (!std::isfinite(norm)) throw std::invalid_argument("expm: non-finite entries");

  int squarings = 0;
  if (norm > kTaylorNormBound) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTaylorNormBound)));
  }
  const ComplexMatrix scaled = a * Complex{std::ldexp(1.0, -squarings), 0.0};

  // Horner form: I + A/1 (I + A/2 (I + ... (I + A/N))).
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  ComplexMatrix result = eye;
  for (int k = kTaylorDegree; k >= 1; --k) {
    result = eye + (scaled * result) * Complex{1.0 / k, 0.0};
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

StateVector4 vectorize(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw std::invalid_argument("vectorize: expected a 2x2 matrix");
  return {rho(0, 0), rho(1, 0), rho(0, 1), rho(1, 1)};
}

ComplexMatrix devectorize(const StateVector4& v) { return ComplexMatrix{{v[0], v[2]}, {v[1], v[3]}}; }

StateVector4 apply_superop(const Superoperator& m, const StateVector4& v) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("apply_superop: expected a 4x4 superoperator");
  StateVector4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool all_finite(const ComplexMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

namespace pauli {

const ComplexMatrix& I() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, 1.0}};
  return m;
}

const ComplexMatrix& X() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& Y() {
  static const ComplexMatrix m{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
  return m;
}

const ComplexMatrix& Z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

const ComplexMatrix& by_index(int k) {
  switch (k) {
    case 0: return I();
    case 1: return X();
    case 2: return Y();
    case 3: return Z();
    default: throw std::out_of_range("pauli::by_index: index must be 0..3");
  }
}

}  // namespace pauli

}  // namespace pecsim
