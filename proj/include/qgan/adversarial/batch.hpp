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
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qgan/adversarial/train.hpp"
#include "qgan/common.hpp"

namespace qgan {

struct RunDigest {
    int run_id = 0;
    std::uint64_t seed = 0;
    double f_max = 0.0;
    std::optional<long> stop_iteration;
    bool aborted = false;
    std::string abort_reason;
};

inline RunDigest digest_of(const RunRecord &record, int run_id) {
    RunDigest d;
    d.run_id = run_id;
    d.seed = record.seed;
    d.f_max = record.f_max;
    d.stop_iteration = record.stop_iteration;
    d.aborted = record.aborted;
    d.abort_reason = record.abort_reason;
    return d;
}

struct ExperimentSummary {
    std::vector<RunDigest> runs;
    double f_avg_max = 0.0;
    double f_max_std_error = 0.0;
    int n_runs = 0;
    int n_aborted = 0;
    std::string config_hash;
};

/// Executes n_runs independent trainings with per-run seeds base + run_id and
/// averages the per-run maximum fidelities. Runs are distributed over a
/// worker pool, but each run is self-contained and results are keyed by run
/// index, so the summary is identical for any worker count. Aborted runs are
/// flagged and excluded from the mean.
inline ExperimentSummary batch_experiment(const TrainConfig &config, const Matrix &target_u, int n_runs,
                                          int worker_count, std::string config_hash = "") {
    detail::require(n_runs >= 1, "batch_experiment: need at least one run");
    config.validate();

    std::vector<RunDigest> digests(static_cast<std::size_t>(n_runs));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const int j = next.fetch_add(1);
            if (j >= n_runs) {
                break;
            }
            try {
                TrainConfig run_config = config;
                run_config.seed = config.seed + static_cast<std::uint64_t>(j);
                const RunRecord record = train_run(run_config, target_u);
                digests[static_cast<std::size_t>(j)] = digest_of(record, j);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    const int n_workers = std::max(1, std::min(worker_count, n_runs));
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
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    ExperimentSummary summary;
    summary.runs = std::move(digests);
    summary.n_runs = n_runs;
    summary.config_hash = std::move(config_hash);
    double sum = 0.0;
    int good = 0;
    for (const auto &d : summary.runs) {
        if (d.aborted) {
            ++summary.n_aborted;
        } else {
            sum += d.f_max;
            ++good;
        }
    }
    summary.f_avg_max = good > 0 ? sum / good : 0.0;
    if (good > 1) {
        double ss = 0.0;
        for (const auto &d : summary.runs) {
            if (!d.aborted) {
                const double dev = d.f_max - summary.f_avg_max;
                ss += dev * dev;
            }
        }
        summary.f_max_std_error = std::sqrt(ss / (good - 1)) / std::sqrt(static_cast<double>(good));
    }
    return summary;
}

} // namespace qgan
