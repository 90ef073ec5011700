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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgan/common.hpp"
#include "qgan/sim/statevector.hpp"

namespace qgan {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-qubit Paulis, one letter per qubit. Letter k acts
/// on qubit k (qubit 0 = most significant bit, as everywhere).
struct PauliString {
    int n_qubits = 0;
    std::vector<Pauli> letters;

    PauliString() = default;

    explicit PauliString(int n) : n_qubits(n), letters(static_cast<std::size_t>(n), Pauli::I) {}

    PauliString(int n, std::vector<Pauli> ls) : n_qubits(n), letters(std::move(ls)) {
        detail::require(static_cast<int>(letters.size()) == n_qubits,
                        "PauliString: letters length must equal qubit count");
    }

    /// Number of non-identity letters.
    int weight() const {
        int w = 0;
        for (Pauli p : letters) {
            if (p != Pauli::I) {
                ++w;
            }
        }
        return w;
    }

    bool is_identity() const { return weight() == 0; }

    std::string label() const {
        std::string s;
        s.reserve(letters.size());
        for (Pauli p : letters) {
            s.push_back(static_cast<char>(p));
        }
        return s;
    }

    friend bool operator==(const PauliString &a, const PauliString &b) = default;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

namespace detail {

/// Bit-mask form of a Pauli string: X and Y letters flip bits, Y and Z
/// letters contribute (-1)^bit signs, and each Y contributes a factor i.
/// P|j> = i^{n_y} * (-1)^{popcount(j & sign_mask)} |j ^ flip_mask>.
struct PauliMasks {
    std::uint64_t flip_mask = 0;
    std::uint64_t sign_mask = 0;
    cplx y_phase{1.0, 0.0};
};

inline PauliMasks pauli_masks(const PauliString &p) {
    PauliMasks m;
    int n_y = 0;
    for (int q = 0; q < p.n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << bit_position(p.n_qubits, q);
        switch (p.letters[static_cast<std::size_t>(q)]) {
        case Pauli::I:
            break;
        case Pauli::X:
            m.flip_mask |= bit;
            break;
        case Pauli::Y:
            m.flip_mask |= bit;
            m.sign_mask |= bit;
            ++n_y;
            break;
        case Pauli::Z:
            m.sign_mask |= bit;
            break;
        }
    }
    static constexpr cplx i_powers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    m.y_phase = i_powers[n_y & 3];
    return m;
}

} // namespace detail

/// <psi|P|psi> for a single Pauli string. Always real for any state.
inline double pauli_expectation(const Statevector &psi, const PauliString &p) {
    detail::require(p.n_qubits == psi.n_qubits, "pauli_expectation: qubit count mismatch");
    const auto m = detail::pauli_masks(p);
    const cplx *a = psi.amplitudes.data();
    const std::size_t n = psi.dim();
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        acc += std::conj(a[j ^ m.flip_mask]) * (parity_sign(j & m.sign_mask) * a[j]);
    }
    return (m.y_phase * acc).real();
}

/// Sum_k c_k <psi|P_k|psi> for a weighted Pauli-string observable.
inline double pauli_expectation(const Statevector &psi, std::span<const PauliTerm> terms) {
    double total = 0.0;
    for (const auto &t : terms) {
        total += t.coefficient * pauli_expectation(psi, t.string);
    }
    return total;
}

/// |chi> += c * P |psi>, the building block for dense observable application.
inline void add_pauli_applied(std::vector<cplx> &chi, const Statevector &psi, const PauliString &p, double c) {
    detail::require(p.n_qubits == psi.n_qubits, "add_pauli_applied: qubit count mismatch");
    const auto m = detail::pauli_masks(p);
    const cplx scale = c * m.y_phase;
    const cplx *a = psi.amplitudes.data();
    const std::size_t n = psi.dim();
    for (std::size_t j = 0; j < n; ++j) {
        chi[j ^ m.flip_mask] += scale * parity_sign(j & m.sign_mask) * a[j];
    }
}

} // namespace qgan
