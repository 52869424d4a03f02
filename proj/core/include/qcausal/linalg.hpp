// Copyright 2026 The qcausal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra for the small (dim <= 16) operators used by
// the two-qubit circuit models. Tensor products order the left factor as the
// most significant index: kron(control, target).

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qcausal {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws InvalidArgument on size mismatch or
  /// non-finite components.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Nested row lists, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) noexcept {
    return entries_[r * cols_ + c];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Copy of the sub-block starting at (row, col).
  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t n_rows,
                      std::size_t n_cols) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// ||U^dagger U - I||_max.
double unitarity_error(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10);

/// Normalized state vector. Construction rejects vectors whose squared norm
/// differs from one by more than 1e-10.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);

  /// Rescales to unit norm; rejects the zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

 private:
  std::vector<Complex> amplitudes_;
};

/// <a|b>
Complex inner(const PureState& a, const PureState& b);
PureState kron(const PureState& a, const PureState& b);
/// U|psi>; U must be unitary of matching dimension.
PureState apply(const ComplexMatrix& u, const PureState& psi);
/// |a><b|
ComplexMatrix outer(const PureState& a, const PureState& b);

/// |<a|b>|^2
double fidelity_pure(const PureState& a, const PureState& b);

enum class Subsystem { First, Second };

/// Hermitian, unit-trace, positive semidefinite matrix. General construction
/// validates all three properties (tolerances 1e-10, 1e-10, -1e-9).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  friend DensityMatrix partial_trace(const DensityMatrix&, Subsystem,
                                     std::pair<std::size_t, std::size_t>);

  ComplexMatrix m_;
};

/// Reduced state on the kept factor of a dims.first x dims.second system.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                            std::pair<std::size_t, std::size_t> dims);

/// Tr(rho^2)
double purity(const DensityMatrix& rho);

/// Ascending eigenvalues of a Hermitian matrix (dim <= 16) by cyclic complex
/// Jacobi rotations. Throws InvalidArgument on non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// 1/2 sum |lambda_i(rho - sigma)|
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Bloch vector (Tr rho X, Tr rho Y, Tr rho Z) of a qubit state.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);
/// Qubit-only trace distance: half the Euclidean distance of Bloch vectors.
double trace_distance_bloch(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qcausal
