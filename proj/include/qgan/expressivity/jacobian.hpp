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

#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"
#include "qgan/sim/circuit.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Jacobian of the circuit's output state on |0...0> with respect to its
/// parameters: column k holds the exact derivative of C(theta)|0...0> in
/// direction theta_k.
struct JacobianMatrix {
    int n_qubits = 0;
    Matrix columns;    // dim x n_params
    Statevector state; // C(theta)|0...0>, kept for phase-quotient diagnostics
};

/// Analytic state Jacobian. Every gate is exp(-i theta/2 P), so column k is
/// obtained by sweeping the circuit once and applying -i/2 times the gate's
/// Pauli generator immediately after gate k.
inline JacobianMatrix state_jacobian(const GeneratorSpec &spec, const ParamVector &theta) {
    detail::require(static_cast<int>(theta.size()) == spec.n_params, "state_jacobian: parameter count mismatch");
    const int n = spec.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const cplx half_derivative{0.0, -0.5}; // -i/2

    JacobianMatrix jac;
    jac.n_qubits = n;
    jac.columns.resize(static_cast<Eigen::Index>(dim), spec.n_params);

    Statevector psi(n, 0);
    for (int k = 0; k < spec.n_params; ++k) {
        psi.set_basis(0);
        for (const Gate &g : spec.gates) {
            apply_gate_in_place(psi, g, theta[static_cast<std::size_t>(g.param_slot)]);
            if (g.param_slot == k) {
                apply_gate_generator_in_place(psi, g);
            }
        }
        for (std::size_t r = 0; r < dim; ++r) {
            jac.columns(static_cast<Eigen::Index>(r), k) = half_derivative * psi.amplitudes[r];
        }
    }

    psi.set_basis(0);
    apply_circuit_in_place(psi, spec.gates, theta);
    jac.state = std::move(psi);
    return jac;
}

} // namespace qgan
