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

#include "qcausal/gates.hpp"

#include <cmath>

#include "qcausal/error.hpp"

namespace qcausal::gates {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }
ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

ComplexMatrix rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, -kI * s}, {-kI * s, c}};
}

ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, -s}, {s, c}};
}

ComplexMatrix projector0() { return {{1.0, 0.0}, {0.0, 0.0}}; }
ComplexMatrix projector1() { return {{0.0, 0.0}, {0.0, 1.0}}; }

ComplexMatrix cnot() { return controlled_pair(identity2(), pauli_x()); }

ComplexMatrix swap_gate() {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

ComplexMatrix controlled_pair(const ComplexMatrix& branch0, const ComplexMatrix& branch1) {
  if (branch0.rows() != 2 || branch0.cols() != 2 || branch1.rows() != 2 || branch1.cols() != 2) {
    throw InvalidArgument("controlled_pair: branches must be 2x2");
  }
  return kron(projector0(), branch0) + kron(projector1(), branch1);
}

}  // namespace qcausal::gates
