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
#include <string>
#include <vector>

#include "qgan/common.hpp"

namespace qgan {

struct AdamParams {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long t = 0;

    explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}

    std::size_t size() const { return m.size(); }

    /// Remaps moments when parameters move to new slots (slot_map[k] = new
    /// slot of old parameter k). Slots outside the image start fresh at zero.
    void remap(const std::vector<int> &slot_map, std::size_t new_size) {
        std::vector<double> nm(new_size, 0.0);
        std::vector<double> nv(new_size, 0.0);
        for (std::size_t k = 0; k < slot_map.size(); ++k) {
            const int s = slot_map[k];
            if (s >= 0) {
                nm[static_cast<std::size_t>(s)] = m[k];
                nv[static_cast<std::size_t>(s)] = v[k];
            }
        }
        m = std::move(nm);
        v = std::move(nv);
    }
};

/// One bias-corrected Adam update. `direction` is -1 for descent, +1 for
/// ascent. Non-finite gradients abort the run.
inline void adam_step(AdamState &state, std::vector<double> &params, const std::vector<double> &grads, double lr,
                      double direction, const AdamParams &p = {}) {
    detail::require(params.size() == grads.size() && params.size() == state.size(),
                    "adam_step: dimension mismatch");
    state.t += 1;
    const double c1 = 1.0 - std::pow(p.beta1, static_cast<double>(state.t));
    const double c2 = 1.0 - std::pow(p.beta2, static_cast<double>(state.t));
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double g = grads[k];
        if (!std::isfinite(g)) {
            throw run_error("adam_step: non-finite gradient at slot " + std::to_string(k));
        }
        state.m[k] = p.beta1 * state.m[k] + (1.0 - p.beta1) * g;
        state.v[k] = p.beta2 * state.v[k] + (1.0 - p.beta2) * g * g;
        const double m_hat = state.m[k] / c1;
        const double v_hat = state.v[k] / c2;
        params[k] += direction * lr * m_hat / (std::sqrt(v_hat) + p.epsilon);
    }
}

} // namespace qgan
