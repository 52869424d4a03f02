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

#include "qcausal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kJacobiTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("ComplexMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw InvalidArgument("ComplexMatrix: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw InvalidArgument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw InvalidArgument("ComplexMatrix: dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ComplexMatrix: ragged row list");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw InvalidArgument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col, std::size_t n_rows,
                                   std::size_t n_cols) const {
  if (row + n_rows > rows_ || col + n_cols > cols_) {
    throw InvalidArgument("ComplexMatrix::block: out of range for " + shape(*this));
  }
  ComplexMatrix out(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (std::size_t c = 0; c < n_cols; ++c) out(r, c) = (*this)(row + r, col + c);
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidArgument("matrix sum: " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidArgument("matrix difference: " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matmul: " + shape(a) + " times " + shape(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw InvalidArgument("trace: non-square " + shape(a));
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: " + shape(a) + " vs " + shape(b));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

double unitarity_error(const ComplexMatrix& u) {
  if (!u.is_square()) return INFINITY;
  return max_abs_diff(matmul(dagger(u), u), ComplexMatrix::identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_error(u) <= tol; }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw InvalidArgument("PureState: empty amplitude vector");
  double norm2 = 0.0;
  for (const auto& z : amplitudes_) {
    if (!finite(z)) throw InvalidArgument("PureState: non-finite amplitude");
    norm2 += std::norm(z);
  }
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw InvalidArgument("PureState: squared norm " + std::to_string(norm2) + " != 1");
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const auto& z : amplitudes) norm2 += std::norm(z);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw InvalidArgument("PureState::normalized: zero or non-finite vector");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : amplitudes) z *= inv;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("PureState::basis: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return PureState(std::move(v));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("inner: dimension " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

PureState kron(const PureState& a, const PureState& b) {
  std::vector<Complex> v(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a[i] * b[j];
  }
  return PureState::normalized(std::move(v));
}

PureState apply(const ComplexMatrix& u, const PureState& psi) {
  if (u.cols() != psi.dim() || !u.is_square()) {
    throw InvalidArgument("apply: operator " + shape(u) + " on state of dim " +
                          std::to_string(psi.dim()));
  }
  std::vector<Complex> v(u.rows());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    Complex s{};
    for (std::size_t c = 0; c < u.cols(); ++c) s += u(r, c) * psi[c];
    v[r] = s;
  }
  return PureState::normalized(std::move(v));
}

ComplexMatrix outer(const PureState& a, const PureState& b) {
  ComplexMatrix m(a.dim(), b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  }
  return m;
}

double fidelity_pure(const PureState& a, const PureState& b) {
  return std::min(1.0, std::norm(inner(a, b)));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!is_hermitian(m_, kHermitianTol)) {
    throw InvalidArgument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex t = trace(m_);
  if (std::abs(t - 1.0) > kTraceTol) {
    throw InvalidArgument("DensityMatrix: trace " + std::to_string(t.real()) + " != 1");
  }
  const auto eig = hermitian_eigenvalues(m_);
  if (eig.front() < -kPsdTol) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " + std::to_string(eig.front()));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(outer(psi, psi), Trusted{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                            std::pair<std::size_t, std::size_t> dims) {
  const auto [da, db] = dims;
  if (da == 0 || db == 0 || da * db != rho.dim()) {
    throw InvalidArgument("partial_trace: dims " + std::to_string(da) + "x" +
                          std::to_string(db) + " do not match density matrix of dim " +
                          std::to_string(rho.dim()));
  }
  const auto& m = rho.matrix();
  if (keep == Subsystem::First) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) {
        Complex s{};
        for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    }
    return DensityMatrix(std::move(out), DensityMatrix::Trusted{});
  }
  ComplexMatrix out(db, db);
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
      out(i, j) = s;
    }
  }
  return DensityMatrix(std::move(out), DensityMatrix::Trusted{});
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& z : rho.matrix().entries()) s += std::norm(z);
  return s;
}

// ---------------------------------------------------------------------------
// Eigenvalues

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
  if (!input.is_square()) throw InvalidArgument("hermitian_eigenvalues: non-square " + shape(input));
  if (input.rows() > 16) throw InvalidArgument("hermitian_eigenvalues: dimension exceeds 16");
  if (!is_hermitian(input, kHermitianTol)) {
    throw InvalidArgument("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  // Symmetrize so round-off from callers does not leak into the rotations.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }

  double frob2 = 0.0;
  for (const auto& z : a.entries()) frob2 += std::norm(z);
  const double threshold = kJacobiTol * std::max(1.0, std::sqrt(frob2));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(a(r, c));
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane
        // makes (G^dagger A G)_pq vanish.
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const Complex gpp = cs;
        const Complex gpq = sn;
        const Complex gqp = -sn * std::conj(phase);
        const Complex gqq = cs * std::conj(phase);
        // A <- A G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        // A <- G^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw InvalidArgument("trace_distance: dimension " + std::to_string(rho.dim()) + " vs " +
                          std::to_string(sigma.dim()));
  }
  double s = 0.0;
  for (double l : hermitian_eigenvalues(rho.matrix() - sigma.matrix())) s += std::abs(l);
  return 0.5 * s;
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw InvalidArgument("bloch_vector: qubit state required");
  const Complex r01 = rho(0, 1);
  return {2.0 * r01.real(), -2.0 * r01.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

double trace_distance_bloch(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const auto a = bloch_vector(rho);
  const auto b = bloch_vector(sigma);
  return 0.5 * std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace qcausal
