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
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qgan/adversarial/adam.hpp"
#include "qgan/adversarial/discriminator.hpp"
#include "qgan/adversarial/loss.hpp"
#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"

namespace qgan {

enum class ScheduleEventKind { InsertAncilla, RandomRestart };

inline std::string schedule_event_name(ScheduleEventKind k) {
    return k == ScheduleEventKind::InsertAncilla ? "insert_ancilla" : "random_restart";
}

/// A one-shot intervention fired once `iteration` update iterations have
/// completed, before the next iteration's updates.
struct ScheduleEvent {
    long iteration = 0;
    ScheduleEventKind kind = ScheduleEventKind::InsertAncilla;
    // InsertAncilla fields.
    AncillaConfig config = AncillaConfig::A4;
    InitMode init_mode = InitMode::Random;
    // RandomRestart field.
    double ratio = 0.0;
};

struct TrainConfig {
    int n_system_qubits = 3;
    int n_layers = 3;
    AncillaConfig initial_ancilla = AncillaConfig::None;
    long max_iters_phase1 = 3000;
    long max_iters_phase2 = 3000;
    double fidelity_threshold = 0.99;
    double lr_generator = 0.01;
    double lr_discriminator = 0.01;
    int disc_steps_per_iter = 1;
    int gen_steps_per_iter = 1;
    double clip_bound = 1.0;
    int max_pauli_weight = 2;
    std::uint64_t seed = 0;
    std::vector<ScheduleEvent> schedule;

    long total_iterations() const { return max_iters_phase1 + max_iters_phase2; }

    void validate() const {
        detail::require(n_system_qubits >= 2, "TrainConfig: need at least two system qubits");
        detail::require(n_layers >= 1, "TrainConfig: need at least one layer");
        detail::require(max_iters_phase1 >= 0 && max_iters_phase2 >= 0,
                        "TrainConfig: iteration counts must be non-negative");
        detail::require(fidelity_threshold > 0.0 && fidelity_threshold <= 1.0,
                        "TrainConfig: fidelity threshold must lie in (0, 1]");
        detail::require(lr_generator > 0.0 && lr_discriminator > 0.0, "TrainConfig: learning rates must be positive");
        detail::require(disc_steps_per_iter >= 0 && gen_steps_per_iter >= 0,
                        "TrainConfig: step counts must be non-negative");
        detail::require(clip_bound > 0.0, "TrainConfig: clip bound must be positive");
        detail::require(max_pauli_weight >= 1, "TrainConfig: weight cap must be at least one");
        long prev = -1;
        for (const auto &ev : schedule) {
            detail::require(ev.iteration >= 0 && ev.iteration < total_iterations(),
                            "TrainConfig: event iteration outside the training budget");
            detail::require(ev.iteration >= prev, "TrainConfig: schedule must be ordered by iteration");
            prev = ev.iteration;
            if (ev.kind == ScheduleEventKind::RandomRestart) {
                detail::require(ev.ratio >= 0.0 && ev.ratio <= 1.0, "TrainConfig: restart ratio must lie in [0, 1]");
            } else {
                detail::require(ev.config != AncillaConfig::None,
                                "TrainConfig: ancilla insertion must name a configuration");
            }
        }
    }
};

struct EventLogEntry {
    long iteration = 0;
    ScheduleEventKind kind = ScheduleEventKind::InsertAncilla;
    AncillaConfig config = AncillaConfig::None;
    InitMode init_mode = InitMode::Random;
    double ratio = 0.0;
    double fidelity_before = 0.0;
    double fidelity_after = 0.0;
};

/// Mutable state of one adversarial training run.
struct TrainState {
    LossContext ctx;
    ParamVector theta;
    std::vector<double> phi;
    AdamState opt_theta;
    AdamState opt_phi;
    long completed_iterations = 0;
    Rng rng;
    TrainConfig config;

    TrainState(LossContext c, TrainConfig cfg, Rng r)
        : ctx(std::move(c)), opt_theta(0), opt_phi(0), rng(r), config(std::move(cfg)) {}
};

struct RunRecord {
    std::uint64_t seed = 0;
    std::vector<double> fidelity_trace;
    std::vector<double> loss_trace;
    double f_max = 0.0;
    std::optional<long> stop_iteration;
    std::vector<EventLogEntry> events;
    ParamVector final_theta;
    std::vector<double> final_phi;
    bool aborted = false;
    std::string abort_reason;
};

/// Generator and discriminator parameters are both drawn at random: angles
/// uniform over a full period, weights uniform within the clip bound. Theta
/// is drawn before phi, which fixes the stream layout for reproducibility.
inline TrainState init_train_state(const TrainConfig &config, const Matrix &target_u) {
    config.validate();
    GeneratorSpec gen = build_generator_spec(config.n_system_qubits, config.n_layers, config.initial_ancilla);
    const int n_choi = 2 * config.n_system_qubits + (gen.has_ancilla() ? 1 : 0);
    DiscriminatorSpec disc = build_discriminator(n_choi, config.max_pauli_weight, config.clip_bound);

    Rng rng(config.seed);
    ParamVector theta = init_params(gen, InitMode::Random, rng);
    std::vector<double> phi(static_cast<std::size_t>(disc.n_terms()), 0.0);
    for (auto &w : phi) {
        w = rng.uniform(-config.clip_bound, config.clip_bound);
    }

    TrainState state(make_loss_context(std::move(gen), std::move(disc), target_u), config, rng);
    state.theta = std::move(theta);
    state.phi = std::move(phi);
    state.opt_theta = AdamState(state.theta.size());
    state.opt_phi = AdamState(state.phi.size());
    return state;
}

enum class UpdateTarget { Generator, Discriminator };

/// One Adam update on the chosen player. The generator descends, the
/// discriminator ascends and is clamped back into the clip box.
inline void optimizer_step(TrainState &state, const std::vector<double> &grads, UpdateTarget which) {
    if (which == UpdateTarget::Generator) {
        adam_step(state.opt_theta, state.theta, grads, state.config.lr_generator, -1.0);
    } else {
        adam_step(state.opt_phi, state.phi, grads, state.config.lr_discriminator, +1.0);
        clamp_weights(state.phi, state.ctx.disc.clip_bound);
    }
}

namespace detail {

inline void insert_ancilla_event(TrainState &state, const ScheduleEvent &ev) {
    require(!state.ctx.gen.has_ancilla(), "apply_schedule_event: generator already carries an ancilla");
    AncillaExtension ext = extend_with_ancilla(state.ctx.gen, state.theta, ev.config, ev.init_mode, state.rng);

    const DiscriminatorSpec old_disc = state.ctx.disc;
    DiscriminatorSpec new_disc =
        build_discriminator(old_disc.n_qubits + 1, old_disc.max_weight, old_disc.clip_bound);
    const std::vector<int> term_map = discriminator_term_map(old_disc, new_disc);

    // Surviving adversary weights are carried over; terms that touch the new
    // qubit start untrained at zero.
    std::vector<double> new_phi(static_cast<std::size_t>(new_disc.n_terms()), 0.0);
    for (std::size_t k = 0; k < term_map.size(); ++k) {
        new_phi[static_cast<std::size_t>(term_map[k])] = state.phi[k];
    }

    state.opt_theta.remap(ext.slot_map, ext.params.size());
    state.opt_phi.remap(term_map, new_phi.size());
    state.theta = std::move(ext.params);
    state.phi = std::move(new_phi);
    state.ctx = make_loss_context(std::move(ext.spec), std::move(new_disc), state.ctx.target_u);
}

inline void random_restart_event(TrainState &state, const ScheduleEvent &ev) {
    require(ev.ratio >= 0.0 && ev.ratio <= 1.0, "apply_schedule_event: restart ratio must lie in [0, 1]");
    const std::size_t n = state.theta.size();
    const auto count = static_cast<std::size_t>(std::ceil(ev.ratio * static_cast<double>(n)));
    if (count == 0) {
        return;
    }
    // Partial Fisher-Yates: the first `count` entries become the redrawn slots.
    std::vector<std::size_t> slots(n);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + state.rng.uniform_index(n - i);
        std::swap(slots[i], slots[j]);
        state.theta[slots[i]] = state.rng.uniform_angle();
    }
}

} // namespace detail

inline void apply_schedule_event(TrainState &state, const ScheduleEvent &ev) {
    if (ev.kind == ScheduleEventKind::InsertAncilla) {
        detail::insert_ancilla_event(state, ev);
    } else {
        detail::random_restart_event(state, ev);
    }
}

/// Full adversarial run. Per iteration the discriminator takes its ascent
/// steps, then the generator its descent steps; the exact fidelity is
/// evaluated afterwards and appended, stopping early once it reaches the
/// threshold. Entry 0 of both traces is the initial point before any update.
/// Schedule events fire once their iteration count has completed, before the
/// following iteration's updates. A run is fully determined by its seed.
inline RunRecord train_run(const TrainConfig &config, const Matrix &target_u) {
    RunRecord record;
    record.seed = config.seed;
    TrainState state = init_train_state(config, target_u);

    record.fidelity_trace.reserve(static_cast<std::size_t>(config.total_iterations()) + 1);
    record.loss_trace.reserve(static_cast<std::size_t>(config.total_iterations()) + 1);
    record.fidelity_trace.push_back(monitored_fidelity(state.ctx, state.theta));
    record.loss_trace.push_back(loss_value(state.theta, state.phi, state.ctx));
    if (record.fidelity_trace.back() >= config.fidelity_threshold) {
        record.stop_iteration = 0;
    }

    std::size_t next_event = 0;
    try {
        for (long it = 1; !record.stop_iteration && it <= config.total_iterations(); ++it) {
            while (next_event < config.schedule.size() &&
                   config.schedule[next_event].iteration == state.completed_iterations) {
                const ScheduleEvent &ev = config.schedule[next_event];
                EventLogEntry log;
                log.iteration = state.completed_iterations;
                log.kind = ev.kind;
                log.config = ev.config;
                log.init_mode = ev.init_mode;
                log.ratio = ev.ratio;
                log.fidelity_before = record.fidelity_trace.back();
                apply_schedule_event(state, ev);
                log.fidelity_after = monitored_fidelity(state.ctx, state.theta);
                record.events.push_back(log);
                ++next_event;
            }

            for (int s = 0; s < config.disc_steps_per_iter; ++s) {
                optimizer_step(state, grad_discriminator(state.theta, state.phi, state.ctx),
                               UpdateTarget::Discriminator);
            }
            for (int s = 0; s < config.gen_steps_per_iter; ++s) {
                optimizer_step(state, grad_generator(state.theta, state.phi, state.ctx), UpdateTarget::Generator);
            }
            state.completed_iterations = it;

            const double fidelity = monitored_fidelity(state.ctx, state.theta);
            record.fidelity_trace.push_back(fidelity);
            record.loss_trace.push_back(loss_value(state.theta, state.phi, state.ctx));
            if (fidelity >= config.fidelity_threshold) {
                record.stop_iteration = it;
                break;
            }
        }
    } catch (const run_error &err) {
        record.aborted = true;
        record.abort_reason = err.what();
    }

    record.f_max = *std::max_element(record.fidelity_trace.begin(), record.fidelity_trace.end());
    record.final_theta = state.theta;
    record.final_phi = state.phi;
    return record;
}

} // namespace qgan
