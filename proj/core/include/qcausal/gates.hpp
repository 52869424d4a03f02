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

// Elementary single- and two-qubit gates. Rotations follow
// R_a(theta) = exp(-i theta sigma_a / 2), so Rx^T = Rx and Ry^T(t) = Ry(-t).

#include "qcausal/linalg.hpp"

namespace qcausal::gates {

ComplexMatrix identity2();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix rx(double theta);
ComplexMatrix ry(double theta);

/// |0><0| and |1><1| on the control qubit.
ComplexMatrix projector0();
ComplexMatrix projector1();

/// Control is the first (most significant) factor.
ComplexMatrix cnot();
ComplexMatrix swap_gate();

/// |0><0| (x) branch0 + |1><1| (x) branch1.
ComplexMatrix controlled_pair(const ComplexMatrix& branch0, const ComplexMatrix& branch1);

}  // namespace qcausal::gates
