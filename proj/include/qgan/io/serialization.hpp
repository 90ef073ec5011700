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
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qgan/adversarial/batch.hpp"
#include "qgan/adversarial/train.hpp"
#include "qgan/common.hpp"
#include "qgan/expressivity/study.hpp"

namespace qgan {

/// 17 significant digits: enough to round-trip any double, and stable across
/// re-runs, which keeps CSV artifacts byte-identical.
inline std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

inline std::uint64_t fnv1a64(const std::string &data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hash_hex(const std::string &data) {
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << fnv1a64(data);
    return os.str();
}

inline void write_text_file(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw run_error("cannot open for writing: " + path.string());
    }
    out << content;
    if (!out) {
        throw run_error("write failed: " + path.string());
    }
}

inline nlohmann::json event_log_to_json(const EventLogEntry &ev) {
    nlohmann::json j;
    j["iteration"] = ev.iteration;
    j["event"] = schedule_event_name(ev.kind);
    if (ev.kind == ScheduleEventKind::InsertAncilla) {
        j["config"] = ancilla_config_name(ev.config);
        j["init_mode"] = init_mode_name(ev.init_mode);
    } else {
        j["ratio"] = ev.ratio;
    }
    j["fidelity_before"] = ev.fidelity_before;
    j["fidelity_after"] = ev.fidelity_after;
    return j;
}

inline nlohmann::json run_record_to_json(const RunRecord &record, bool include_traces = true) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["seed"] = record.seed;
    j["f_max"] = record.f_max;
    if (record.stop_iteration) {
        j["stop_iteration"] = *record.stop_iteration;
    } else {
        j["stop_iteration"] = nullptr;
    }
    j["aborted"] = record.aborted;
    if (record.aborted) {
        j["abort_reason"] = record.abort_reason;
    }
    j["events"] = nlohmann::json::array();
    for (const auto &ev : record.events) {
        j["events"].push_back(event_log_to_json(ev));
    }
    if (include_traces) {
        j["fidelity_trace"] = record.fidelity_trace;
        j["loss_trace"] = record.loss_trace;
    }
    j["final_theta"] = record.final_theta;
    j["final_phi"] = record.final_phi;
    return j;
}

/// Flat per-iteration trace; the event column marks the boundary iteration
/// after which the event fired.
inline std::string run_record_to_csv(const RunRecord &record, int run_id = 0) {
    std::ostringstream os;
    os << "run_id,iteration,fidelity,loss,event\n";
    for (std::size_t i = 0; i < record.fidelity_trace.size(); ++i) {
        std::string event_label;
        for (const auto &ev : record.events) {
            if (ev.iteration == static_cast<long>(i)) {
                event_label = schedule_event_name(ev.kind);
            }
        }
        os << run_id << ',' << i << ',' << format_double(record.fidelity_trace[i]) << ','
           << format_double(record.loss_trace[i]) << ',' << event_label << '\n';
    }
    return os.str();
}

inline nlohmann::json train_config_to_json(const TrainConfig &cfg) {
    nlohmann::json j;
    j["n_system_qubits"] = cfg.n_system_qubits;
    j["n_layers"] = cfg.n_layers;
    j["initial_ancilla"] = ancilla_config_name(cfg.initial_ancilla);
    j["max_iters_phase1"] = cfg.max_iters_phase1;
    j["max_iters_phase2"] = cfg.max_iters_phase2;
    j["fidelity_threshold"] = cfg.fidelity_threshold;
    j["lr_generator"] = cfg.lr_generator;
    j["lr_discriminator"] = cfg.lr_discriminator;
    j["disc_steps_per_iter"] = cfg.disc_steps_per_iter;
    j["gen_steps_per_iter"] = cfg.gen_steps_per_iter;
    j["clip_bound"] = cfg.clip_bound;
    j["max_pauli_weight"] = cfg.max_pauli_weight;
    j["seed"] = cfg.seed;
    j["schedule"] = nlohmann::json::array();
    for (const auto &ev : cfg.schedule) {
        nlohmann::json e;
        e["event"] = schedule_event_name(ev.kind);
        e["iteration"] = ev.iteration;
        if (ev.kind == ScheduleEventKind::InsertAncilla) {
            e["config"] = ancilla_config_name(ev.config);
            e["init_mode"] = init_mode_name(ev.init_mode);
        } else {
            e["ratio"] = ev.ratio;
        }
        j["schedule"].push_back(e);
    }
    return j;
}

inline nlohmann::json summary_to_json(const ExperimentSummary &summary) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["config_hash"] = summary.config_hash;
    j["n_runs"] = summary.n_runs;
    j["n_aborted"] = summary.n_aborted;
    j["f_avg_max"] = summary.f_avg_max;
    j["f_max_std_error"] = summary.f_max_std_error;
    j["runs"] = nlohmann::json::array();
    for (const auto &run : summary.runs) {
        nlohmann::json r;
        r["run_id"] = run.run_id;
        r["seed"] = run.seed;
        r["f_max"] = run.f_max;
        if (run.stop_iteration) {
            r["stop_iteration"] = *run.stop_iteration;
        } else {
            r["stop_iteration"] = nullptr;
        }
        r["aborted"] = run.aborted;
        if (run.aborted) {
            r["abort_reason"] = run.abort_reason;
        }
        j["runs"].push_back(r);
    }
    return j;
}

inline nlohmann::json rank_report_to_json(const RankReport &report) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["config"] = ancilla_config_name(report.config);
    j["n_layers"] = report.n_layers;
    j["n_params"] = report.n_params;
    j["n_samples"] = report.n_samples;
    j["rel_tol"] = report.rel_tol;
    j["generic_rank"] = report.generic_rank;
    j["zero_param_rank"] = report.zero_param_rank;
    j["phase_quotient_generic_rank"] = report.phase_quotient_generic_rank;
    j["exception_fraction"] = report.exception_fraction;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto &[rank, count] : report.histogram) {
        hist[std::to_string(rank)] = count;
    }
    j["histogram"] = hist;
    return j;
}

inline std::string rank_reports_to_csv(const std::vector<RankReport> &reports) {
    std::ostringstream os;
    os << "config,sample_id,rank\n";
    for (const auto &report : reports) {
        for (std::size_t s = 0; s < report.sample_ranks.size(); ++s) {
            os << ancilla_config_name(report.config) << ',' << s << ',' << report.sample_ranks[s] << '\n';
        }
    }
    return os.str();
}

} // namespace qgan
