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

#include <Eigen/SVD>

#include "qgan/common.hpp"
#include "qgan/expressivity/jacobian.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Stacks real and imaginary parts into a 2*rows x cols real matrix. Ranks of
/// state Jacobians are taken over the reals: the parameters are real, so the
/// tangent-space dimension is the real span of the columns.
inline Eigen::MatrixXd real_embedding(const Matrix &m) {
    Eigen::MatrixXd out(2 * m.rows(), m.cols());
    out.topRows(m.rows()) = m.real();
    out.bottomRows(m.rows()) = m.imag();
    return out;
}

/// Number of singular values above rel_tol times the largest one. An all-zero
/// matrix has rank 0.
inline int numerical_rank(const Matrix &m, double rel_tol = 1e-10) {
    detail::require(rel_tol > 0.0 && rel_tol < 1.0, "numerical_rank: tolerance must lie in (0, 1)");
    if (m.size() == 0) {
        return 0;
    }
    const Eigen::MatrixXd embedded = real_embedding(m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(embedded);
    const auto &sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) <= 0.0) {
        return 0;
    }
    const double cutoff = rel_tol * sigma(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

inline int numerical_rank(const JacobianMatrix &jac, double rel_tol = 1e-10) {
    return numerical_rank(jac.columns, rel_tol);
}

/// Rank of the Jacobian modulo the global-phase direction i*psi: the rank of
/// the column space augmented with that direction, minus one. Reported as a
/// diagnostic next to the raw rank.
inline int phase_quotient_rank(const JacobianMatrix &jac, double rel_tol = 1e-10) {
    Matrix augmented(jac.columns.rows(), jac.columns.cols() + 1);
    augmented.leftCols(jac.columns.cols()) = jac.columns;
    for (Eigen::Index r = 0; r < augmented.rows(); ++r) {
        augmented(r, jac.columns.cols()) = cplx{0.0, 1.0} * jac.state.amplitudes[static_cast<std::size_t>(r)];
    }
    return numerical_rank(augmented, rel_tol) - 1;
}

} // namespace qgan
