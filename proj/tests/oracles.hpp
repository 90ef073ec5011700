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
//
// Test-only oracles. Everything here goes through dense Kronecker products
// and numerical matrix exponentials, independent of the bit-kernel
// implementation paths it is used to check.
#pragma once

#include <Eigen/Eigenvalues>
#include <complex>
#include <vector>

#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"
#include "qgan/sim/pauli.hpp"
#include "qgan/sim/statevector.hpp"
#include "qgan/sim/unitary.hpp"

namespace oracle {

using qgan::cplx;
using qgan::Matrix;

inline Matrix pauli_matrix(qgan::Pauli p) {
    Matrix m(2, 2);
    switch (p) {
    case qgan::Pauli::I:
        m << 1, 0, 0, 1;
        break;
    case qgan::Pauli::X:
        m << 0, 1, 1, 0;
        break;
    case qgan::Pauli::Y:
        m << 0, cplx{0, -1}, cplx{0, 1}, 0;
        break;
    case qgan::Pauli::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

/// Dense matrix of a Pauli string by Kronecker products, letter 0 leftmost
/// (most significant qubit).
inline Matrix pauli_string_matrix(const qgan::PauliString &s) {
    Matrix m = Matrix::Identity(1, 1);
    for (qgan::Pauli p : s.letters) {
        m = qgan::kron(m, pauli_matrix(p));
    }
    return m;
}

/// exp(i * scale * H) for Hermitian H, through the eigendecomposition.
inline Matrix expm_hermitian_times_i(const Matrix &h, double scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto &vals = es.eigenvalues();
    const Matrix &vecs = es.eigenvectors();
    Matrix phases = Matrix::Zero(h.rows(), h.cols());
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases(k, k) = std::polar(1.0, scale * vals(k));
    }
    return vecs * phases * vecs.adjoint();
}

/// Pauli string with the given letters placed on the given qubits.
inline qgan::PauliString string_on(int n_qubits, const std::vector<std::pair<int, qgan::Pauli>> &letters) {
    qgan::PauliString s(n_qubits);
    for (const auto &[q, p] : letters) {
        s.letters[static_cast<std::size_t>(q)] = p;
    }
    return s;
}

/// Dense unitary of one rotation gate: exp(-i angle/2 P) with P the gate's
/// Pauli generator embedded on the full register.
inline Matrix gate_matrix(const qgan::Gate &g, double angle, int n_qubits) {
    std::vector<std::pair<int, qgan::Pauli>> letters;
    switch (g.kind) {
    case qgan::RotationKind::RX:
        letters = {{g.q0, qgan::Pauli::X}};
        break;
    case qgan::RotationKind::RZ:
        letters = {{g.q0, qgan::Pauli::Z}};
        break;
    case qgan::RotationKind::RZZ:
        letters = {{g.q0, qgan::Pauli::Z}, {g.q1, qgan::Pauli::Z}};
        break;
    }
    const Matrix p = pauli_string_matrix(string_on(n_qubits, letters));
    return expm_hermitian_times_i(p, -0.5 * angle);
}

/// Dense circuit unitary by explicit matrix products, gate after gate.
inline Matrix circuit_matrix(const qgan::GeneratorSpec &spec, const qgan::ParamVector &params) {
    const Eigen::Index d = Eigen::Index{1} << spec.n_qubits();
    Matrix u = Matrix::Identity(d, d);
    for (const qgan::Gate &g : spec.gates) {
        u = gate_matrix(g, params[static_cast<std::size_t>(g.param_slot)], spec.n_qubits()) * u;
    }
    return u;
}

inline Eigen::VectorXcd to_eigen(const qgan::Statevector &psi) {
    return Eigen::Map<const Eigen::VectorXcd>(psi.amplitudes.data(), static_cast<Eigen::Index>(psi.dim()));
}

inline qgan::Statevector from_eigen(int n_qubits, const Eigen::VectorXcd &v) {
    qgan::Statevector psi(n_qubits, 0);
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        psi.amplitudes[j] = v(static_cast<Eigen::Index>(j));
    }
    return psi;
}

/// Explicit Choi-state construction: build the maximally entangled input as
/// an amplitude vector, then act with the dense operator I_A x U (x I_a).
/// The ancilla variant appends the |0> ancilla to the B side first.
inline qgan::Statevector choi_state_explicit(const Matrix &u, bool with_ancilla) {
    const int n_u = std::countr_zero(static_cast<std::size_t>(u.rows()));
    const int n_sys = with_ancilla ? n_u - 1 : n_u;
    const std::size_t d_sys = std::size_t{1} << n_sys;

    Eigen::VectorXcd input;
    if (!with_ancilla) {
        input = to_eigen(qgan::maximally_entangled_state(n_sys));
    } else {
        const Eigen::VectorXcd omega = to_eigen(qgan::maximally_entangled_state(n_sys));
        Eigen::VectorXcd ancilla_ket = Eigen::VectorXcd::Zero(2);
        ancilla_ket(0) = 1.0;
        input = Eigen::VectorXcd::Zero(omega.size() * 2);
        for (Eigen::Index i = 0; i < omega.size(); ++i) {
            input(2 * i) = omega(i); // |omega> tensor |0>_a
        }
    }
    const Matrix big = qgan::kron(Matrix::Identity(static_cast<Eigen::Index>(d_sys), static_cast<Eigen::Index>(d_sys)), u);
    const Eigen::VectorXcd out = big * input;
    const int n_total = 2 * n_sys + (with_ancilla ? 1 : 0);
    return from_eigen(n_total, out);
}

/// Haar-random unitary via QR of a Ginibre matrix with phase fixing.
inline Matrix haar_unitary(int dim, qgan::Rng &rng) {
    Matrix g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            // Box-Muller from the deterministic stream.
            const double u1 = std::max(rng.uniform01(), 1e-300);
            const double u2 = rng.uniform01();
            const double u3 = std::max(rng.uniform01(), 1e-300);
            const double u4 = rng.uniform01();
            const double re = std::sqrt(-2.0 * std::log(u1)) * std::cos(qgan::two_pi * u2);
            const double im = std::sqrt(-2.0 * std::log(u3)) * std::cos(qgan::two_pi * u4);
            g(r, c) = cplx{re, im};
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const cplx d = r(k, k);
        q.col(k) *= (std::abs(d) > 0.0) ? d / std::abs(d) : cplx{1.0, 0.0};
    }
    return q;
}

/// Central finite difference of a scalar function of one parameter vector.
template <typename F>
inline std::vector<double> finite_difference_gradient(F &&f, const std::vector<double> &x, double step) {
    std::vector<double> grad(x.size());
    std::vector<double> probe = x;
    for (std::size_t k = 0; k < x.size(); ++k) {
        probe[k] = x[k] + step;
        const double plus = f(probe);
        probe[k] = x[k] - step;
        const double minus = f(probe);
        probe[k] = x[k];
        grad[k] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

} // namespace oracle
