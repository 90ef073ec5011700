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

#include <Eigen/Dense>
#include <bit>
#include <cmath>

#include "qgan/common.hpp"

namespace qgan {

/// Dense complex matrix. Everything in this library is desk scale (dim <= 128),
/// so dense storage is used throughout.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline bool is_unitary(const Matrix &u, double tol = 1e-10) {
    if (u.rows() != u.cols()) {
        return false;
    }
    const Matrix g = u.adjoint() * u;
    return (g - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

/// Kronecker product, row-major qubit convention (left factor = more
/// significant qubits).
inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Hilbert-Schmidt fidelity |Tr(A^dag B)|^2 / d^2. Equals 1 exactly when the
/// two unitaries agree up to a global phase; also accepts non-unitary blocks
/// (used for ancilla projections), where it stays in [0, 1].
inline double fidelity_hs(const Matrix &a, const Matrix &b) {
    detail::require(a.rows() == a.cols() && b.rows() == b.cols(), "fidelity_hs: matrices must be square");
    detail::require(a.rows() == b.rows(), "fidelity_hs: dimension mismatch");
    const double d = static_cast<double>(a.rows());
    const cplx tr = (a.adjoint() * b).trace();
    return std::norm(tr) / (d * d);
}

/// Time evolution of the three-body interaction Z x Z x Z for time t:
/// diagonal 8x8 matrix with entry e^{-i t p(b)}, where p(b) is the product of
/// the three Z eigenvalues (+-1) of basis state b.
inline Matrix target_unitary_zzz(double t = 1.0) {
    Matrix u = Matrix::Zero(8, 8);
    for (int b = 0; b < 8; ++b) {
        const double parity = (std::popcount(static_cast<unsigned>(b)) & 1) ? -1.0 : 1.0;
        u(b, b) = std::polar(1.0, -t * parity);
    }
    return u;
}

/// Blocks of a unitary on system+ancilla with respect to the ancilla
/// computational basis. The ancilla is the least significant qubit, so the
/// ancilla-|0> block lives on the even rows and columns.
struct AncillaBlockDecomposition {
    Matrix kept_block;      // <0|_a U |0>_a
    Matrix discarded_block; // <1|_a U |1>_a
    double off_block_norm = 0.0;
};

inline AncillaBlockDecomposition project_ancilla_block(const Matrix &u) {
    detail::require(u.rows() == u.cols(), "project_ancilla_block: matrix must be square");
    detail::require(u.rows() % 2 == 0, "project_ancilla_block: dimension must be even");
    const Eigen::Index d = u.rows() / 2;
    AncillaBlockDecomposition out;
    out.kept_block.resize(d, d);
    out.discarded_block.resize(d, d);
    double off2 = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
            out.kept_block(j, k) = u(2 * j, 2 * k);
            out.discarded_block(j, k) = u(2 * j + 1, 2 * k + 1);
            off2 += std::norm(u(2 * j, 2 * k + 1)) + std::norm(u(2 * j + 1, 2 * k));
        }
    }
    out.off_block_norm = std::sqrt(off2);
    return out;
}

} // namespace qgan
