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

#include "qcausal/circuits.hpp"

#include <cmath>
#include <string>

#include "qcausal/error.hpp"
#include "qcausal/gates.hpp"

namespace qcausal {

using namespace gates;

std::string_view family_name(CircuitFamily family) {
  switch (family) {
    case CircuitFamily::Switch: return "switch";
    case CircuitFamily::TimeFlip: return "timeflip";
    case CircuitFamily::Rxy: return "rxy";
    case CircuitFamily::RxyRyx: return "rxyryx";
    case CircuitFamily::Sep: return "sep";
    case CircuitFamily::Hea: return "hea";
  }
  return "unknown";
}

std::optional<CircuitFamily> parse_family(std::string_view name) {
  for (auto f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string valid_family_names() {
  std::string out;
  for (auto f : kAllFamilies) {
    if (!out.empty()) out += ", ";
    out += family_name(f);
  }
  return out;
}

bool has_control_preparation(CircuitFamily family) {
  return family != CircuitFamily::Sep && family != CircuitFamily::Hea;
}

std::string_view layer_policy_name(LayerPolicy policy) {
  return policy == LayerPolicy::FullBlock ? "full-block" : "prep-once";
}

std::optional<LayerPolicy> parse_layer_policy(std::string_view name) {
  if (name == "full-block") return LayerPolicy::FullBlock;
  if (name == "prep-once") return LayerPolicy::PrepOnce;
  return std::nullopt;
}

std::size_t param_count(CircuitFamily /*family*/, int layers) {
  if (layers < 1) throw InvalidArgument("param_count: layers must be >= 1");
  return 2 * static_cast<std::size_t>(layers);
}

ComplexMatrix switch_block(double theta1, double theta2) {
  return controlled_pair(rx(theta1) * ry(theta2), ry(theta2) * rx(theta1));
}

ComplexMatrix timeflip_block(double theta1, double theta2) {
  return controlled_pair(rx(theta1) * transpose(ry(theta2)), transpose(rx(theta1)) * ry(theta2));
}

ComplexMatrix rxy_block(double theta1, double theta2) {
  return controlled_pair(identity2(), rx(theta1) * ry(theta2));
}

ComplexMatrix rxyryx_block(double theta1, double theta2) {
  return controlled_pair(rx(theta1) * ry(theta2), ry(theta1) * rx(theta2));
}

ComplexMatrix layer_unitary(CircuitFamily family, double theta1, double theta2, bool prepare) {
  ComplexMatrix block(4, 4);
  switch (family) {
    case CircuitFamily::Switch: block = switch_block(theta1, theta2); break;
    case CircuitFamily::TimeFlip: block = timeflip_block(theta1, theta2); break;
    case CircuitFamily::Rxy: block = rxy_block(theta1, theta2); break;
    case CircuitFamily::RxyRyx: block = rxyryx_block(theta1, theta2); break;
    case CircuitFamily::Sep: return kron(ry(theta1), ry(theta2));
    case CircuitFamily::Hea: return cnot() * kron(ry(theta1), ry(theta2));
  }
  if (!prepare) return block;
  return block * kron(hadamard(), identity2());
}

ComplexMatrix build_circuit(CircuitFamily family, int layers, std::span<const double> params,
                            LayerPolicy policy) {
  if (layers < 1) throw InvalidArgument("build_circuit: layers must be >= 1");
  if (params.size() != param_count(family, layers)) {
    throw InvalidArgument("build_circuit: " + std::string(family_name(family)) + " with " +
                          std::to_string(layers) + " layer(s) needs " +
                          std::to_string(param_count(family, layers)) + " parameters, got " +
                          std::to_string(params.size()));
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw InvalidArgument("build_circuit: non-finite parameter");
  }
  ComplexMatrix u = ComplexMatrix::identity(4);
  for (int l = 0; l < layers; ++l) {
    const bool prepare = policy == LayerPolicy::FullBlock || l == 0;
    u = layer_unitary(family, params[2 * l], params[2 * l + 1], prepare) * u;
  }
  return u;
}

ComplexMatrix build_circuit(const CircuitSpec& spec) {
  return build_circuit(spec.family, spec.layers, spec.params, spec.policy);
}

}  // namespace qcausal
