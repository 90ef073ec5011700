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

#include <atomic>
#include <map>
#include <thread>
#include <vector>

#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"
#include "qgan/expressivity/jacobian.hpp"
#include "qgan/expressivity/rank.hpp"

namespace qgan {

/// Sampled numerical-rank statistics of one ansatz configuration.
struct RankReport {
    AncillaConfig config = AncillaConfig::None;
    int n_layers = 1;
    int n_params = 0;
    long n_samples = 0;
    double rel_tol = 1e-10;
    std::map<int, long> histogram;          // rank -> sample count
    int generic_rank = 0;                   // modal rank over the random samples
    double exception_fraction = 0.0;        // share of samples off the modal rank
    int zero_param_rank = 0;                // rank at theta = 0
    int phase_quotient_generic_rank = 0;    // modal rank modulo global phase
    std::vector<int> sample_ranks;          // per-sample ranks, in sample order
};

/// Draws `n_samples` parameter vectors uniformly from [0, 2*pi)^n per
/// configuration and records the numerical Jacobian rank of each. All draws
/// come from the caller's generator in a fixed order, and per-sample results
/// are merged by index, so reports do not depend on the worker count.
inline std::vector<RankReport> expressivity_study(const std::vector<AncillaConfig> &configs, int n_layers,
                                                  long n_samples, Rng &rng, int worker_count = 1,
                                                  double rel_tol = 1e-10, int n_system_qubits = 3) {
    detail::require(n_samples >= 1, "expressivity_study: need at least one sample");
    std::vector<RankReport> reports;
    reports.reserve(configs.size());

    for (const AncillaConfig config : configs) {
        const GeneratorSpec spec = build_generator_spec(n_system_qubits, n_layers, config);

        RankReport report;
        report.config = config;
        report.n_layers = n_layers;
        report.n_params = spec.n_params;
        report.n_samples = n_samples;
        report.rel_tol = rel_tol;

        const ParamVector zeros(static_cast<std::size_t>(spec.n_params), 0.0);
        report.zero_param_rank = numerical_rank(state_jacobian(spec, zeros), rel_tol);

        std::vector<ParamVector> draws(static_cast<std::size_t>(n_samples));
        for (auto &theta : draws) {
            theta.resize(static_cast<std::size_t>(spec.n_params));
            for (auto &v : theta) {
                v = rng.uniform_angle();
            }
        }

        std::vector<int> ranks(static_cast<std::size_t>(n_samples), 0);
        std::vector<int> quotient_ranks(static_cast<std::size_t>(n_samples), 0);
        std::atomic<long> next{0};
        auto work = [&]() {
            while (true) {
                const long s = next.fetch_add(1);
                if (s >= n_samples) {
                    break;
                }
                const JacobianMatrix jac = state_jacobian(spec, draws[static_cast<std::size_t>(s)]);
                ranks[static_cast<std::size_t>(s)] = numerical_rank(jac, rel_tol);
                quotient_ranks[static_cast<std::size_t>(s)] = phase_quotient_rank(jac, rel_tol);
            }
        };
        const int n_workers = std::max(1, static_cast<int>(std::min<long>(worker_count, n_samples)));
        if (n_workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(n_workers));
            for (int w = 0; w < n_workers; ++w) {
                pool.emplace_back(work);
            }
            for (auto &t : pool) {
                t.join();
            }
        }

        std::map<int, long> quotient_histogram;
        for (long s = 0; s < n_samples; ++s) {
            report.histogram[ranks[static_cast<std::size_t>(s)]] += 1;
            quotient_histogram[quotient_ranks[static_cast<std::size_t>(s)]] += 1;
        }
        auto modal = [](const std::map<int, long> &hist) {
            int best_rank = 0;
            long best_count = -1;
            for (const auto &[rank, count] : hist) {
                if (count > best_count) {
                    best_rank = rank;
                    best_count = count;
                }
            }
            return std::pair<int, long>{best_rank, best_count};
        };
        const auto [mode_rank, mode_count] = modal(report.histogram);
        report.generic_rank = mode_rank;
        report.exception_fraction = 1.0 - static_cast<double>(mode_count) / static_cast<double>(n_samples);
        report.phase_quotient_generic_rank = modal(quotient_histogram).first;
        report.sample_ranks = std::move(ranks);
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace qgan
