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

#include <bit>

#include "qgan/common.hpp"
#include "qgan/sim/statevector.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Maximally entangled reference state over 2n qubits,
/// (1/sqrt(d)) sum_i |i>_A |i>_B, with register A in the most significant
/// qubits.
inline Statevector maximally_entangled_state(int n_qubits_per_side) {
    const std::size_t d = std::size_t{1} << n_qubits_per_side;
    Statevector psi(2 * n_qubits_per_side, 0);
    psi.amplitudes[0] = cplx{0.0, 0.0};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) {
        psi.amplitudes[i * d + i] = cplx{amp, 0.0};
    }
    return psi;
}

/// Output of acting with U on the B half of the maximally entangled state.
///
/// Without ancilla (U on N qubits): returns (I_A x U)|Omega> on 2N qubits.
/// By the vectorization identity the amplitude of |i>_A |j>_B is U(j, i)/sqrt(d),
/// which this routine fills directly instead of simulating 2N qubits gate by
/// gate.
///
/// With `with_ancilla` set (U on N+1 qubits, ancilla = least significant
/// qubit of the B side): the input is |Omega> x |0>_a and the result lives on
/// 2N+1 qubits. The amplitude of |i>_A |m>_{B,a} is U(m, 2i)/sqrt(2^N) --
/// column 2i because the ancilla enters in |0>.
inline Statevector choi_output_state(const Matrix &u, bool with_ancilla = false) {
    detail::require(u.rows() == u.cols(), "choi_output_state: matrix must be square");
    const std::size_t dim = static_cast<std::size_t>(u.rows());
    detail::require(dim >= 2 && std::has_single_bit(dim), "choi_output_state: dimension must be a power of two");
    const int n_u = std::countr_zero(dim);
    if (!with_ancilla) {
        const int n_sys = n_u;
        Statevector psi(2 * n_sys, 0);
        psi.amplitudes[0] = cplx{0.0, 0.0};
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                psi.amplitudes[i * dim + j] = scale * u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
            }
        }
        return psi;
    }
    detail::require(dim >= 4, "choi_output_state: ancilla form needs at least two qubits");
    const int n_sys = n_u - 1;
    const std::size_t d_sys = dim >> 1;
    Statevector psi(2 * n_sys + 1, 0);
    psi.amplitudes[0] = cplx{0.0, 0.0};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d_sys));
    for (std::size_t i = 0; i < d_sys; ++i) {
        for (std::size_t m = 0; m < dim; ++m) {
            psi.amplitudes[i * dim + m] =
                scale * u(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(2 * i));
        }
    }
    return psi;
}

} // namespace qgan
