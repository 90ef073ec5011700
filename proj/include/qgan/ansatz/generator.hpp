// Copyright 2026 The qgan developers
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

#include <string>
#include <vector>

#include "qgan/common.hpp"
#include "qgan/sim/circuit.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Connectivity of the auxiliary qubit within each layer.
///
///   A1: ancilla rotations + one coupling to the last system qubit
///   A2: couplings to the last and first system qubits, no ancilla rotations
///   A3: A2 plus ancilla rotations
///   A4: A3 plus couplings to every remaining system qubit
enum class AncillaConfig { None, A1, A2, A3, A4 };

inline bool ancilla_has_rotations(AncillaConfig c) {
    return c == AncillaConfig::A1 || c == AncillaConfig::A3 || c == AncillaConfig::A4;
}

inline std::string ancilla_config_name(AncillaConfig c) {
    switch (c) {
    case AncillaConfig::None:
        return "none";
    case AncillaConfig::A1:
        return "a1";
    case AncillaConfig::A2:
        return "a2";
    case AncillaConfig::A3:
        return "a3";
    case AncillaConfig::A4:
        return "a4";
    }
    return "none";
}

inline AncillaConfig parse_ancilla_config(const std::string &s) {
    if (s == "none") {
        return AncillaConfig::None;
    }
    if (s == "a1") {
        return AncillaConfig::A1;
    }
    if (s == "a2") {
        return AncillaConfig::A2;
    }
    if (s == "a3") {
        return AncillaConfig::A3;
    }
    if (s == "a4") {
        return AncillaConfig::A4;
    }
    throw contract_error("unknown ancilla config: " + s);
}

/// Layered hardware-efficient generator layout. Within each layer the gate
/// order is: RX on every rotated qubit, RZ on every rotated qubit, the
/// nearest-neighbour RZZ chain on the system qubits, then the ancilla
/// couplings of the active configuration. The ancilla, when present, is the
/// last qubit (least significant bit).
struct GeneratorSpec {
    int n_system_qubits = 0;
    int n_layers = 0;
    AncillaConfig ancilla = AncillaConfig::None;
    std::vector<Gate> gates;
    int n_params = 0;

    bool has_ancilla() const { return ancilla != AncillaConfig::None; }
    int n_qubits() const { return n_system_qubits + (has_ancilla() ? 1 : 0); }
    int ancilla_qubit() const { return n_system_qubits; }
    int params_per_layer() const { return n_layers > 0 ? n_params / n_layers : 0; }

    /// Slots are assigned in gate order, one per gate, so the slot -> gate
    /// map is the identity and the layer is recovered by division.
    int layer_of_slot(int slot) const {
        detail::require(slot >= 0 && slot < n_params, "layer_of_slot: slot out of range");
        return slot / params_per_layer();
    }
    const Gate &gate_of_slot(int slot) const {
        detail::require(slot >= 0 && slot < n_params, "gate_of_slot: slot out of range");
        return gates[static_cast<std::size_t>(slot)];
    }
};

namespace detail {

/// System qubits the ancilla couples to, in gate order.
inline std::vector<int> ancilla_coupling_targets(AncillaConfig c, int n_system) {
    std::vector<int> targets;
    switch (c) {
    case AncillaConfig::None:
        break;
    case AncillaConfig::A1:
        targets = {n_system - 1};
        break;
    case AncillaConfig::A2:
    case AncillaConfig::A3:
        targets = {n_system - 1, 0};
        break;
    case AncillaConfig::A4:
        targets = {n_system - 1, 0};
        for (int q = 1; q < n_system - 1; ++q) {
            targets.push_back(q);
        }
        break;
    }
    return targets;
}

} // namespace detail

inline int per_layer_param_count(AncillaConfig c, int n_system) {
    const int rotated = n_system + (ancilla_has_rotations(c) ? 1 : 0);
    const int system_couplings = n_system - 1;
    const int ancilla_couplings = static_cast<int>(detail::ancilla_coupling_targets(c, n_system).size());
    return 2 * rotated + system_couplings + ancilla_couplings;
}

inline GeneratorSpec build_generator_spec(int n_qubits, int n_layers, AncillaConfig config) {
    detail::require(n_qubits >= 2, "build_generator_spec: need at least two system qubits");
    detail::require(n_layers >= 1, "build_generator_spec: need at least one layer");
    detail::require(config == AncillaConfig::None || n_qubits >= 3,
                    "build_generator_spec: ancilla configurations require at least three system qubits");

    GeneratorSpec spec;
    spec.n_system_qubits = n_qubits;
    spec.n_layers = n_layers;
    spec.ancilla = config;

    const int anc = n_qubits;
    const bool anc_rot = ancilla_has_rotations(config);
    const auto targets = detail::ancilla_coupling_targets(config, n_qubits);

    int slot = 0;
    auto push = [&spec, &slot](RotationKind kind, int q0, int q1) {
        spec.gates.push_back(Gate{kind, q0, q1, slot});
        ++slot;
    };

    for (int layer = 0; layer < n_layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            push(RotationKind::RX, q, -1);
        }
        if (anc_rot) {
            push(RotationKind::RX, anc, -1);
        }
        for (int q = 0; q < n_qubits; ++q) {
            push(RotationKind::RZ, q, -1);
        }
        if (anc_rot) {
            push(RotationKind::RZ, anc, -1);
        }
        for (int q = 0; q + 1 < n_qubits; ++q) {
            push(RotationKind::RZZ, q, q + 1);
        }
        for (int target : targets) {
            push(RotationKind::RZZ, target, anc);
        }
    }
    spec.n_params = slot;
    return spec;
}

enum class InitMode { Random, Zero };

inline std::string init_mode_name(InitMode m) { return m == InitMode::Random ? "random" : "zero"; }

inline InitMode parse_init_mode(const std::string &s) {
    if (s == "random") {
        return InitMode::Random;
    }
    if (s == "zero") {
        return InitMode::Zero;
    }
    throw contract_error("unknown init mode: " + s);
}

/// Random mode draws every angle uniformly from [0, 2*pi); zero mode makes
/// the circuit the identity.
inline ParamVector init_params(const GeneratorSpec &spec, InitMode mode, Rng &rng) {
    ParamVector params(static_cast<std::size_t>(spec.n_params), 0.0);
    if (mode == InitMode::Random) {
        for (auto &v : params) {
            v = rng.uniform_angle();
        }
    }
    return params;
}

/// Result of enlarging an ancilla-free generator. `slot_map[k]` is the new
/// slot of the old parameter k; new slots not in the image hold the ancilla
/// gates.
struct AncillaExtension {
    GeneratorSpec spec;
    ParamVector params;
    std::vector<int> slot_map;
};

/// Rebuilds the layout with the requested ancilla configuration, carrying
/// every existing parameter value to its new slot. New slots are initialized
/// per `init_mode`; with zero init the extended circuit acts as the original
/// one tensored with the identity on the ancilla.
inline AncillaExtension extend_with_ancilla(const GeneratorSpec &spec, const ParamVector &params,
                                            AncillaConfig config, InitMode init_mode, Rng &rng) {
    detail::require(!spec.has_ancilla(), "extend_with_ancilla: spec already has an ancilla");
    detail::require(config != AncillaConfig::None, "extend_with_ancilla: config must name an ancilla layout");
    detail::require(static_cast<int>(params.size()) == spec.n_params,
                    "extend_with_ancilla: parameter count mismatch");

    AncillaExtension out;
    out.spec = build_generator_spec(spec.n_system_qubits, spec.n_layers, config);
    out.params.assign(static_cast<std::size_t>(out.spec.n_params), 0.0);
    out.slot_map.assign(params.size(), -1);

    const int anc = out.spec.ancilla_qubit();
    std::size_t old_idx = 0;
    for (const Gate &g : out.spec.gates) {
        const bool touches_ancilla = (g.q0 == anc) || (g.q1 == anc);
        if (touches_ancilla) {
            out.params[static_cast<std::size_t>(g.param_slot)] =
                (init_mode == InitMode::Random) ? rng.uniform_angle() : 0.0;
            continue;
        }
        const Gate &old_gate = spec.gates[old_idx];
        detail::require(old_gate.kind == g.kind && old_gate.q0 == g.q0 && old_gate.q1 == g.q1,
                        "extend_with_ancilla: layouts diverged");
        out.params[static_cast<std::size_t>(g.param_slot)] = params[old_idx];
        out.slot_map[old_idx] = g.param_slot;
        ++old_idx;
    }
    detail::require(old_idx == params.size(), "extend_with_ancilla: not all parameters were carried over");
    return out;
}

/// Dense unitary of the generator at the given parameters.
inline Matrix circuit_unitary(const GeneratorSpec &spec, const ParamVector &params) {
    detail::require(static_cast<int>(params.size()) == spec.n_params,
                    "circuit_unitary: parameter count mismatch");
    return circuit_unitary(spec.n_qubits(), spec.gates, params);
}

} // namespace qgan
