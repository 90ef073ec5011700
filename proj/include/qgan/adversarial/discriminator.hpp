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

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "qgan/common.hpp"
#include "qgan/sim/pauli.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Adversary observable: a weighted sum over all Pauli strings up to a weight
/// cap (the pure identity is excluded -- it cannot distinguish states). The
/// weights are trained under a clip bound that keeps the observable's scale
/// fixed, WGAN style.
struct DiscriminatorSpec {
    int n_qubits = 0;
    int max_weight = 2;
    double clip_bound = 1.0;
    std::vector<PauliString> terms;

    int n_terms() const { return static_cast<int>(terms.size()); }
};

namespace detail {

inline void enumerate_weight_terms(int n_qubits, int weight, std::vector<PauliString> &out) {
    static constexpr Pauli non_identity[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    // Lexicographic qubit subsets of the given size.
    std::vector<int> subset(static_cast<std::size_t>(weight));
    for (int i = 0; i < weight; ++i) {
        subset[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        // Odometer over the 3^weight letter assignments.
        std::vector<int> letters(static_cast<std::size_t>(weight), 0);
        while (true) {
            PauliString s(n_qubits);
            for (int i = 0; i < weight; ++i) {
                s.letters[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] =
                    non_identity[letters[static_cast<std::size_t>(i)]];
            }
            out.push_back(std::move(s));
            int pos = weight - 1;
            while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == 2) {
                letters[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++letters[static_cast<std::size_t>(pos)];
        }
        // Next subset.
        int pos = weight - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n_qubits - weight + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < weight; ++i) {
            subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

} // namespace detail

/// Builds the full deduplicated term list of weights 1..max_weight in a
/// deterministic order (by weight, then qubit subset, then letters).
inline DiscriminatorSpec build_discriminator(int n_qubits, int max_weight = 2, double clip_bound = 1.0) {
    detail::require(n_qubits >= 1, "build_discriminator: need at least one qubit");
    detail::require(max_weight >= 1 && max_weight <= n_qubits, "build_discriminator: invalid weight cap");
    detail::require(clip_bound > 0.0, "build_discriminator: clip bound must be positive");
    DiscriminatorSpec spec;
    spec.n_qubits = n_qubits;
    spec.max_weight = max_weight;
    spec.clip_bound = clip_bound;
    for (int w = 1; w <= max_weight; ++w) {
        detail::enumerate_weight_terms(n_qubits, w, spec.terms);
    }
    return spec;
}

/// Term index mapping from a discriminator on n qubits to one on n+1 qubits:
/// old strings keep their meaning with an identity letter appended for the
/// new (last) qubit. Used to carry trained weights across ancilla insertion.
inline std::vector<int> discriminator_term_map(const DiscriminatorSpec &from, const DiscriminatorSpec &to) {
    detail::require(to.n_qubits == from.n_qubits + 1, "discriminator_term_map: target must add one qubit");
    std::unordered_map<std::string, int> index_of;
    index_of.reserve(to.terms.size());
    for (int k = 0; k < to.n_terms(); ++k) {
        index_of.emplace(to.terms[static_cast<std::size_t>(k)].label(), k);
    }
    std::vector<int> map(from.terms.size(), -1);
    for (int k = 0; k < from.n_terms(); ++k) {
        const std::string extended = from.terms[static_cast<std::size_t>(k)].label() + "I";
        const auto it = index_of.find(extended);
        detail::require(it != index_of.end(), "discriminator_term_map: extended term missing");
        map[static_cast<std::size_t>(k)] = it->second;
    }
    return map;
}

inline void clamp_weights(std::vector<double> &phi, double bound) {
    for (auto &w : phi) {
        w = std::clamp(w, -bound, bound);
    }
}

/// Dense matrix of sum_k phi_k P_k. Used in the gradient hot loop, where one
/// assembly amortizes over all parameter-shift evaluations.
inline Matrix dense_observable(const DiscriminatorSpec &disc, const std::vector<double> &phi) {
    detail::require(static_cast<int>(phi.size()) == disc.n_terms(), "dense_observable: weight count mismatch");
    const std::size_t dim = std::size_t{1} << disc.n_qubits;
    Matrix d = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (int k = 0; k < disc.n_terms(); ++k) {
        const double c = phi[static_cast<std::size_t>(k)];
        if (c == 0.0) {
            continue;
        }
        const auto m = detail::pauli_masks(disc.terms[static_cast<std::size_t>(k)]);
        const cplx scale = c * m.y_phase;
        for (std::size_t j = 0; j < dim; ++j) {
            d(static_cast<Eigen::Index>(j ^ m.flip_mask), static_cast<Eigen::Index>(j)) +=
                scale * parity_sign(j & m.sign_mask);
        }
    }
    return d;
}

} // namespace qgan
