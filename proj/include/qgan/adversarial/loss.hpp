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

#include <vector>

#include "qgan/adversarial/discriminator.hpp"
#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"
#include "qgan/sim/choi.hpp"
#include "qgan/sim/pauli.hpp"

namespace qgan {

/// Everything fixed during a training phase: the generator layout, the
/// adversary term set, the target unitary, and the cached target-side
/// expectations. The target's output state never changes, so its per-term
/// expectations are computed once.
struct LossContext {
    GeneratorSpec gen;
    DiscriminatorSpec disc;
    Matrix target_u;
    Statevector target_state;
    std::vector<double> target_expectations;
};

/// Output state of the generator on the entangled input, via the
/// vectorization identity on the circuit unitary.
inline Statevector generator_choi_state(const LossContext &ctx, const ParamVector &theta) {
    return choi_output_state(circuit_unitary(ctx.gen, theta), ctx.gen.has_ancilla());
}

inline LossContext make_loss_context(GeneratorSpec gen, DiscriminatorSpec disc, Matrix target_u) {
    const int n_sys = gen.n_system_qubits;
    detail::require(target_u.rows() == (Eigen::Index{1} << n_sys),
                    "make_loss_context: target dimension must match the system register");
    const int n_choi = 2 * n_sys + (gen.has_ancilla() ? 1 : 0);
    detail::require(disc.n_qubits == n_choi,
                    "make_loss_context: discriminator must act on the full output space");

    LossContext ctx{std::move(gen), std::move(disc), std::move(target_u), {}, {}};
    if (ctx.gen.has_ancilla()) {
        // The target side carries an untouched ancilla line in |0>.
        ctx.target_state = choi_output_state(kron(ctx.target_u, Matrix::Identity(2, 2)), true);
    } else {
        ctx.target_state = choi_output_state(ctx.target_u, false);
    }
    ctx.target_expectations.reserve(ctx.disc.terms.size());
    for (const auto &term : ctx.disc.terms) {
        ctx.target_expectations.push_back(pauli_expectation(ctx.target_state, term));
    }
    return ctx;
}

/// Adversarial objective L = sum_k phi_k (<P_k>_target - <P_k>_generator).
/// The generator descends on it, the discriminator ascends.
inline double loss_value(const ParamVector &theta, const std::vector<double> &phi, const LossContext &ctx) {
    detail::require(static_cast<int>(phi.size()) == ctx.disc.n_terms(), "loss_value: weight count mismatch");
    const Statevector psi_g = generator_choi_state(ctx, theta);
    double loss = 0.0;
    for (int k = 0; k < ctx.disc.n_terms(); ++k) {
        const double diff = ctx.target_expectations[static_cast<std::size_t>(k)] -
                            pauli_expectation(psi_g, ctx.disc.terms[static_cast<std::size_t>(k)]);
        loss += phi[static_cast<std::size_t>(k)] * diff;
    }
    return loss;
}

/// dL/dphi_k = <P_k>_target - <P_k>_generator, exactly (L is linear in phi).
inline std::vector<double> grad_discriminator(const ParamVector &theta, const std::vector<double> &phi,
                                              const LossContext &ctx) {
    detail::require(static_cast<int>(phi.size()) == ctx.disc.n_terms(),
                    "grad_discriminator: weight count mismatch");
    const Statevector psi_g = generator_choi_state(ctx, theta);
    std::vector<double> grad(phi.size(), 0.0);
    for (int k = 0; k < ctx.disc.n_terms(); ++k) {
        grad[static_cast<std::size_t>(k)] =
            ctx.target_expectations[static_cast<std::size_t>(k)] -
            pauli_expectation(psi_g, ctx.disc.terms[static_cast<std::size_t>(k)]);
    }
    return grad;
}

namespace detail {

inline double expectation_dense(const Statevector &psi, const Matrix &obs) {
    const Eigen::Map<const Vector> v(psi.amplitudes.data(), static_cast<Eigen::Index>(psi.dim()));
    return (v.adjoint() * (obs * v)).value().real();
}

/// Reusable scratch for the many shifted generator-state evaluations of a
/// gradient call. Fills the Choi output state in place; with an ancilla only
/// the even circuit columns are computed, since the input holds the ancilla
/// in |0>. Produces exactly the same state as generator_choi_state.
class ChoiEvaluator {
  public:
    explicit ChoiEvaluator(const GeneratorSpec &gen)
        : gen_(&gen), column_(gen.n_qubits(), 0),
          psi_(2 * gen.n_system_qubits + (gen.has_ancilla() ? 1 : 0), 0),
          scale_(1.0 / std::sqrt(static_cast<double>(std::size_t{1} << gen.n_system_qubits))) {}

    const Statevector &evaluate(const ParamVector &theta) {
        const std::size_t d_sys = std::size_t{1} << gen_->n_system_qubits;
        const std::size_t dim = column_.dim();
        const std::size_t stride = gen_->has_ancilla() ? 2 : 1;
        for (std::size_t i = 0; i < d_sys; ++i) {
            column_.set_basis(i * stride);
            apply_circuit_in_place(column_, gen_->gates, theta);
            cplx *out = psi_.amplitudes.data() + i * dim;
            const cplx *in = column_.amplitudes.data();
            for (std::size_t m = 0; m < dim; ++m) {
                out[m] = scale_ * in[m];
            }
        }
        return psi_;
    }

  private:
    const GeneratorSpec *gen_;
    Statevector column_;
    Statevector psi_;
    double scale_;
};

} // namespace detail

/// dL/dtheta via the parameter-shift rule: every gate is exp(-i theta/2 P)
/// with P a Pauli string, so d<D>/dtheta_k = (<D>(theta_k + pi/2) -
/// <D>(theta_k - pi/2)) / 2 exactly. Only the generator expectation depends
/// on theta; the dense observable is assembled once and reused for all 2N
/// shifted evaluations.
inline std::vector<double> grad_generator(const ParamVector &theta, const std::vector<double> &phi,
                                          const LossContext &ctx) {
    detail::require(static_cast<int>(theta.size()) == ctx.gen.n_params, "grad_generator: parameter count mismatch");
    const Matrix obs = dense_observable(ctx.disc, phi);
    detail::ChoiEvaluator evaluator(ctx.gen);
    Vector applied(obs.rows());
    auto expectation = [&](const ParamVector &params) {
        const Statevector &psi = evaluator.evaluate(params);
        const Eigen::Map<const Vector> v(psi.amplitudes.data(), static_cast<Eigen::Index>(psi.dim()));
        applied.noalias() = obs * v;
        return v.dot(applied).real();
    };
    std::vector<double> grad(theta.size(), 0.0);
    ParamVector shifted = theta;
    const double half_pi = 1.5707963267948966;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + half_pi;
        const double e_plus = expectation(shifted);
        shifted[k] = theta[k] - half_pi;
        const double e_minus = expectation(shifted);
        shifted[k] = theta[k];
        // L depends on theta only through -<D>_G.
        grad[k] = -0.5 * (e_plus - e_minus);
    }
    return grad;
}

/// Exact training monitor: Hilbert-Schmidt fidelity of the full generator
/// unitary against the target, or of its ancilla-|0> block once the
/// generator carries an ancilla.
inline double monitored_fidelity(const LossContext &ctx, const ParamVector &theta) {
    const Matrix u_g = circuit_unitary(ctx.gen, theta);
    if (!ctx.gen.has_ancilla()) {
        return fidelity_hs(u_g, ctx.target_u);
    }
    return fidelity_hs(project_ancilla_block(u_g).kept_block, ctx.target_u);
}

} // namespace qgan
