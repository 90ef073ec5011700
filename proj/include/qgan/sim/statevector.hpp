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

#include <cmath>
#include <cstdint>
#include <vector>

#include "qgan/common.hpp"

namespace qgan {

/// Qubit ordering convention used across the library: qubit 0 is the most
/// significant bit of the basis-state index, so a basis index reads like the
/// ket label (|q0 q1 ... q_{n-1}>). The last qubit is the least significant
/// bit; ancilla qubits are always appended last.
inline int bit_position(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

/// Exact complex amplitude vector over n qubits.
struct Statevector {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    Statevector() = default;

    /// |index> on n qubits.
    Statevector(int n, std::size_t index) : n_qubits(n), amplitudes(std::size_t{1} << n, cplx{0.0, 0.0}) {
        detail::require(n >= 1 && n <= 24, "Statevector: qubit count out of range");
        detail::require(index < amplitudes.size(), "Statevector: basis index out of range");
        amplitudes[index] = cplx{1.0, 0.0};
    }

    static Statevector zero_state(int n) { return Statevector(n, 0); }

    static Statevector basis(int n, std::size_t index) { return Statevector(n, index); }

    std::size_t dim() const { return amplitudes.size(); }

    /// Reset to |index> without reallocating.
    void set_basis(std::size_t index) {
        for (auto &a : amplitudes) {
            a = cplx{0.0, 0.0};
        }
        amplitudes[index] = cplx{1.0, 0.0};
    }

    double squared_norm() const {
        double s = 0.0;
        for (const auto &a : amplitudes) {
            s += std::norm(a);
        }
        return s;
    }
};

inline cplx inner_product(const Statevector &a, const Statevector &b) {
    detail::require(a.n_qubits == b.n_qubits, "inner_product: qubit counts differ");
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < a.dim(); ++j) {
        s += std::conj(a.amplitudes[j]) * b.amplitudes[j];
    }
    return s;
}

enum class RotationKind { RX, RZ, RZZ };

namespace detail {

inline void check_qubit(const Statevector &psi, int q, const char *who) {
    if (q < 0 || q >= psi.n_qubits) {
        throw std::out_of_range(std::string(who) + ": qubit index out of range");
    }
}

} // namespace detail

/// exp(-i*angle/2 * X_q) applied in place.
inline void apply_rx_in_place(Statevector &psi, int q, double angle) {
    detail::check_qubit(psi, q, "apply_rx");
    const double c = std::cos(0.5 * angle);
    const cplx mis{0.0, -std::sin(0.5 * angle)}; // -i sin(angle/2)
    const std::size_t step = std::size_t{1} << bit_position(psi.n_qubits, q);
    const std::size_t block = step << 1;
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t base = 0; base < n; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cplx a0 = a[i0];
            const cplx a1 = a[i1];
            a[i0] = c * a0 + mis * a1;
            a[i1] = mis * a0 + c * a1;
        }
    }
}

/// exp(-i*angle/2 * Z_q) applied in place. Diagonal: phase e^{-i angle/2} on
/// bit 0, e^{+i angle/2} on bit 1.
inline void apply_rz_in_place(Statevector &psi, int q, double angle) {
    detail::check_qubit(psi, q, "apply_rz");
    const cplx p0 = std::polar(1.0, -0.5 * angle);
    const cplx p1 = std::polar(1.0, +0.5 * angle);
    const std::size_t mask = std::size_t{1} << bit_position(psi.n_qubits, q);
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t j = 0; j < n; ++j) {
        a[j] *= (j & mask) ? p1 : p0;
    }
}

/// exp(-i*angle/2 * Z_qa Z_qb) applied in place. Diagonal: e^{-i angle/2}
/// when the two bits agree, e^{+i angle/2} when they differ.
inline void apply_rzz_in_place(Statevector &psi, int qa, int qb, double angle) {
    detail::check_qubit(psi, qa, "apply_rzz");
    detail::check_qubit(psi, qb, "apply_rzz");
    if (qa == qb) {
        throw std::out_of_range("apply_rzz: qubit indices must be distinct");
    }
    const cplx even = std::polar(1.0, -0.5 * angle);
    const cplx odd = std::polar(1.0, +0.5 * angle);
    const std::size_t ma = std::size_t{1} << bit_position(psi.n_qubits, qa);
    const std::size_t mb = std::size_t{1} << bit_position(psi.n_qubits, qb);
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t j = 0; j < n; ++j) {
        const bool ba = (j & ma) != 0;
        const bool bb = (j & mb) != 0;
        a[j] *= (ba == bb) ? even : odd;
    }
}

/// Pauli X_q in place (used by derivative insertions and expectation tests).
inline void apply_pauli_x_in_place(Statevector &psi, int q) {
    detail::check_qubit(psi, q, "apply_pauli_x");
    const std::size_t step = std::size_t{1} << bit_position(psi.n_qubits, q);
    const std::size_t block = step << 1;
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t base = 0; base < n; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            std::swap(a[base + off], a[base + off + step]);
        }
    }
}

/// Pauli Z_q in place.
inline void apply_pauli_z_in_place(Statevector &psi, int q) {
    detail::check_qubit(psi, q, "apply_pauli_z");
    const std::size_t mask = std::size_t{1} << bit_position(psi.n_qubits, q);
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t j = 0; j < n; ++j) {
        if (j & mask) {
            a[j] = -a[j];
        }
    }
}

/// Z_qa Z_qb in place.
inline void apply_pauli_zz_in_place(Statevector &psi, int qa, int qb) {
    detail::check_qubit(psi, qa, "apply_pauli_zz");
    detail::check_qubit(psi, qb, "apply_pauli_zz");
    const std::size_t ma = std::size_t{1} << bit_position(psi.n_qubits, qa);
    const std::size_t mb = std::size_t{1} << bit_position(psi.n_qubits, qb);
    const std::size_t n = psi.dim();
    cplx *a = psi.amplitudes.data();
    for (std::size_t j = 0; j < n; ++j) {
        const bool ba = (j & ma) != 0;
        const bool bb = (j & mb) != 0;
        if (ba != bb) {
            a[j] = -a[j];
        }
    }
}

/// Dispatch over the three supported rotation kinds. `q1` is ignored for
/// single-qubit kinds.
inline void apply_rotation_in_place(Statevector &psi, RotationKind kind, int q0, int q1, double angle) {
    switch (kind) {
    case RotationKind::RX:
        apply_rx_in_place(psi, q0, angle);
        break;
    case RotationKind::RZ:
        apply_rz_in_place(psi, q0, angle);
        break;
    case RotationKind::RZZ:
        apply_rzz_in_place(psi, q0, q1, angle);
        break;
    }
}

/// Value-returning form of the rotation application.
inline Statevector apply_rotation(const Statevector &psi, RotationKind kind, int q0, int q1, double angle) {
    Statevector out = psi;
    apply_rotation_in_place(out, kind, q0, q1, angle);
    return out;
}

inline Statevector apply_rotation(const Statevector &psi, RotationKind kind, int q, double angle) {
    detail::require(kind != RotationKind::RZZ, "apply_rotation: RZZ needs two qubit indices");
    return apply_rotation(psi, kind, q, -1, angle);
}

} // namespace qgan
