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

#include <span>
#include <vector>

#include "qgan/common.hpp"
#include "qgan/sim/statevector.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// One parameterized rotation in a gate list. `q1` is -1 for single-qubit
/// kinds. Each gate owns exactly one parameter slot; slots are assigned in
/// gate order, so slot k always refers to gates[k].
struct Gate {
    RotationKind kind = RotationKind::RX;
    int q0 = 0;
    int q1 = -1;
    int param_slot = 0;
};

using ParamVector = std::vector<double>;

inline void apply_gate_in_place(Statevector &psi, const Gate &g, double angle) {
    apply_rotation_in_place(psi, g.kind, g.q0, g.q1, angle);
}

/// Inserts the gate's Pauli generator (X for RX, Z for RZ, ZZ for RZZ); the
/// -i/2 prefactor of the derivative is left to the caller.
inline void apply_gate_generator_in_place(Statevector &psi, const Gate &g) {
    switch (g.kind) {
    case RotationKind::RX:
        apply_pauli_x_in_place(psi, g.q0);
        break;
    case RotationKind::RZ:
        apply_pauli_z_in_place(psi, g.q0);
        break;
    case RotationKind::RZZ:
        apply_pauli_zz_in_place(psi, g.q0, g.q1);
        break;
    }
}

inline void apply_circuit_in_place(Statevector &psi, std::span<const Gate> gates, std::span<const double> params) {
    detail::require(params.size() >= gates.size(), "apply_circuit: parameter vector too short");
    for (const Gate &g : gates) {
        apply_gate_in_place(psi, g, params[static_cast<std::size_t>(g.param_slot)]);
    }
}

/// Dense unitary of a gate list: column j is the circuit applied to the
/// computational basis state |j>.
inline Matrix circuit_unitary(int n_qubits, std::span<const Gate> gates, std::span<const double> params) {
    const std::size_t d = std::size_t{1} << n_qubits;
    Matrix u(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    Statevector psi(n_qubits, 0);
    for (std::size_t j = 0; j < d; ++j) {
        psi.set_basis(j);
        apply_circuit_in_place(psi, gates, params);
        for (std::size_t r = 0; r < d; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = psi.amplitudes[r];
        }
    }
    return u;
}

} // namespace qgan
