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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcausal/linalg.hpp"

namespace qcausal {

/// The six circuit families compared throughout the library.
enum class CircuitFamily { Switch, TimeFlip, Rxy, RxyRyx, Sep, Hea };

inline constexpr std::array<CircuitFamily, 6> kAllFamilies = {
    CircuitFamily::Switch, CircuitFamily::TimeFlip, CircuitFamily::Rxy,
    CircuitFamily::RxyRyx, CircuitFamily::Sep,      CircuitFamily::Hea};

/// Canonical lowercase name: switch, timeflip, rxy, rxyryx, sep, hea.
std::string_view family_name(CircuitFamily family);
std::optional<CircuitFamily> parse_family(std::string_view name);
/// "switch, timeflip, rxy, rxyryx, sep, hea"
std::string valid_family_names();

/// True for the families whose layer begins with a Hadamard on the control.
bool has_control_preparation(CircuitFamily family);

/// How the control-preparation Hadamard repeats across layers.
///   FullBlock: every layer is the complete block, Hadamard included.
///   PrepOnce:  the Hadamard appears in the first layer only.
enum class LayerPolicy { FullBlock, PrepOnce };

std::string_view layer_policy_name(LayerPolicy policy);
std::optional<LayerPolicy> parse_layer_policy(std::string_view name);

/// Angles in radians; two per layer for every family.
using ParameterVector = std::vector<double>;

std::size_t param_count(CircuitFamily family, int layers);

struct CircuitSpec {
  CircuitFamily family;
  int layers;
  ParameterVector params;
  LayerPolicy policy = LayerPolicy::PrepOnce;
};

// Two-qubit blocks without control preparation. Control (first factor)
// selects the branch applied to the target.

/// |0><0| (x) Rx(t1)Ry(t2) + |1><1| (x) Ry(t2)Rx(t1)
ComplexMatrix switch_block(double theta1, double theta2);
/// |0><0| (x) Rx(t1)Ry^T(t2) + |1><1| (x) Rx^T(t1)Ry(t2)
ComplexMatrix timeflip_block(double theta1, double theta2);
/// |0><0| (x) I + |1><1| (x) Rx(t1)Ry(t2)
ComplexMatrix rxy_block(double theta1, double theta2);
/// |0><0| (x) Rx(t1)Ry(t2) + |1><1| (x) Ry(t1)Rx(t2)
ComplexMatrix rxyryx_block(double theta1, double theta2);

/// Unitary of one layer. With `prepare` set, families that carry a control
/// Hadamard apply it before their block; Sep and Hea ignore the flag.
ComplexMatrix layer_unitary(CircuitFamily family, double theta1, double theta2, bool prepare);

/// Product of layer unitaries, layer 1 acting first. Throws InvalidArgument
/// if the parameter count is not 2 * layers or layers < 1.
ComplexMatrix build_circuit(const CircuitSpec& spec);
ComplexMatrix build_circuit(CircuitFamily family, int layers, std::span<const double> params,
                            LayerPolicy policy = LayerPolicy::PrepOnce);

}  // namespace qcausal
