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

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgan/adversarial/batch.hpp"
#include "qgan/io/config.hpp"
#include "qgan/io/serialization.hpp"

namespace qgan {

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime_error = 1;
inline constexpr int exit_config_error = 2;

/// One arm of a sweep: a label, axis values for the consolidated table, and
/// the effective training configuration.
struct SweepPoint {
    std::string name;
    std::string ancilla_config;
    std::string init_mode;
    std::string timing;
    std::string restart_ratio;
    bool is_reference = false;
    TrainConfig config;
};

namespace detail {

inline std::string format_ratio(double r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline long effective_insertion_iteration(const ExperimentConfig &cfg) {
    return cfg.study.insertion_iteration >= 0 ? cfg.study.insertion_iteration : cfg.training.max_iters_phase1;
}

} // namespace detail

/// Expands a sweep study into its points. Every ancilla and timing sweep
/// carries the ancilla-free run as its reference row; a restart sweep uses
/// the unmodified (ratio 0) run, which is added when absent.
inline std::vector<SweepPoint> build_sweep_points(const ExperimentConfig &cfg) {
    detail::require(cfg.study.kind == StudyKind::AncillaSweep || cfg.study.kind == StudyKind::TimingSweep ||
                        cfg.study.kind == StudyKind::RestartSweep,
                    "build_sweep_points: not a sweep study");
    const long insertion = detail::effective_insertion_iteration(cfg);

    TrainConfig base = cfg.training;
    base.initial_ancilla = AncillaConfig::None;
    base.schedule.clear();

    std::vector<SweepPoint> points;
    switch (cfg.study.kind) {
    case StudyKind::AncillaSweep: {
        SweepPoint ref{"none", "none", "", "", "", true, base};
        points.push_back(std::move(ref));
        for (const AncillaConfig c : cfg.study.ancilla_configs) {
            for (const InitMode m : cfg.study.init_modes) {
                SweepPoint pt;
                pt.name = ancilla_config_name(c) + "_" + init_mode_name(m);
                pt.ancilla_config = ancilla_config_name(c);
                pt.init_mode = init_mode_name(m);
                pt.timing = "mid";
                pt.config = base;
                pt.config.schedule = {ScheduleEvent{insertion, ScheduleEventKind::InsertAncilla, c, m, 0.0}};
                points.push_back(std::move(pt));
            }
        }
        break;
    }
    case StudyKind::TimingSweep: {
        SweepPoint ref{"none", "none", "", "", "", true, base};
        points.push_back(std::move(ref));
        for (const AncillaConfig c : cfg.study.ancilla_configs) {
            for (const std::string &timing : cfg.study.timings) {
                SweepPoint pt;
                pt.name = ancilla_config_name(c) + "_" + timing;
                pt.ancilla_config = ancilla_config_name(c);
                pt.init_mode = init_mode_name(cfg.study.timing_init_mode);
                pt.timing = timing;
                pt.config = base;
                if (timing == "start") {
                    pt.config.initial_ancilla = c;
                } else {
                    pt.config.schedule = {
                        ScheduleEvent{insertion, ScheduleEventKind::InsertAncilla, c, cfg.study.timing_init_mode, 0.0}};
                }
                points.push_back(std::move(pt));
            }
        }
        break;
    }
    case StudyKind::RestartSweep: {
        std::vector<double> ratios = cfg.study.ratios;
        bool has_zero = false;
        for (const double r : ratios) {
            has_zero = has_zero || r == 0.0;
        }
        if (!has_zero) {
            ratios.insert(ratios.begin(), 0.0);
        }
        for (const double r : ratios) {
            SweepPoint pt;
            pt.name = "ratio_" + detail::format_ratio(r);
            pt.restart_ratio = detail::format_ratio(r);
            pt.is_reference = (r == 0.0);
            pt.config = base;
            pt.config.schedule = {
                ScheduleEvent{insertion, ScheduleEventKind::RandomRestart, AncillaConfig::None, InitMode::Random, r}};
            points.push_back(std::move(pt));
        }
        break;
    }
    default:
        break;
    }
    return points;
}

/// Runs a single seeded training and writes its record (JSON) and
/// per-iteration trace (CSV) into the output directory.
inline int cmd_train(const ExperimentConfig &cfg, int workers) {
    (void)workers; // a single run is sequential by construction
    if (cfg.study.kind != StudyKind::Single) {
        throw config_error("config error at /study/kind: the train command expects \"single\"");
    }
    const Matrix target = target_unitary_of(cfg);
    const RunRecord record = train_run(cfg.training, target);

    const nlohmann::json effective = experiment_config_to_json(cfg);
    const std::string hash = hash_hex(effective.dump());
    const std::filesystem::path out_dir(cfg.output_directory);
    if (cfg.write_json) {
        nlohmann::json j = run_record_to_json(record);
        j["config_hash"] = hash;
        j["config"] = effective;
        write_text_file(out_dir / "run.json", j.dump(2) + "\n");
    }
    if (cfg.write_csv) {
        write_text_file(out_dir / "trace.csv", run_record_to_csv(record));
    }

    std::cout << "run finished: f_max=" << format_double(record.f_max);
    if (record.stop_iteration) {
        std::cout << " threshold reached at iteration " << *record.stop_iteration;
    }
    if (record.aborted) {
        std::cout << " ABORTED: " << record.abort_reason;
    }
    std::cout << " (artifacts in " << out_dir.string() << ")\n";
    return record.aborted ? exit_runtime_error : exit_ok;
}

/// Expands the configured sweep, runs each point as a seeded batch, and
/// writes one summary document per point plus the consolidated table.
inline int cmd_sweep(const ExperimentConfig &cfg, int workers) {
    if (cfg.study.kind != StudyKind::AncillaSweep && cfg.study.kind != StudyKind::TimingSweep &&
        cfg.study.kind != StudyKind::RestartSweep) {
        throw config_error("config error at /study/kind: the sweep command expects a sweep study");
    }
    const Matrix target = target_unitary_of(cfg);
    const std::vector<SweepPoint> points = build_sweep_points(cfg);
    const std::string kind = study_kind_name(cfg.study.kind);
    const std::filesystem::path out_dir(cfg.output_directory);

    std::ostringstream csv;
    csv << "point,ancilla_config,init_mode,timing,restart_ratio,is_reference,n_runs,f_avg_max,std_error\n";
    for (const SweepPoint &pt : points) {
        nlohmann::json point_desc;
        point_desc["point"] = pt.name;
        point_desc["target_time"] = cfg.target_time;
        point_desc["training"] = train_config_to_json(pt.config);
        const std::string hash = hash_hex(point_desc.dump());

        const ExperimentSummary summary =
            batch_experiment(pt.config, target, cfg.study.runs_per_point, workers, hash);

        if (cfg.write_json) {
            nlohmann::json j = summary_to_json(summary);
            j["point"] = pt.name;
            j["is_reference"] = pt.is_reference;
            j["effective_training_config"] = point_desc["training"];
            write_text_file(out_dir / (kind + "_" + pt.name + ".json"), j.dump(2) + "\n");
        }
        csv << pt.name << ',' << pt.ancilla_config << ',' << pt.init_mode << ',' << pt.timing << ','
            << pt.restart_ratio << ',' << (pt.is_reference ? 1 : 0) << ',' << summary.n_runs << ','
            << format_double(summary.f_avg_max) << ',' << format_double(summary.f_max_std_error) << '\n';
        std::cout << kind << " point " << pt.name << ": f_avg_max=" << format_double(summary.f_avg_max)
                  << " (n=" << summary.n_runs << ", aborted=" << summary.n_aborted << ")\n";
    }
    if (cfg.write_csv) {
        write_text_file(out_dir / (kind + ".csv"), csv.str());
    }
    std::cout << "sweep finished (artifacts in " << out_dir.string() << ")\n";
    return exit_ok;
}

/// Jacobian-rank study over the configured ansatz list, with the modal-rank
/// ordering verdict between the a4/a3/a1 chain when all three are present.
inline int cmd_expressivity(const ExperimentConfig &cfg, int workers) {
    if (cfg.study.kind != StudyKind::Expressivity) {
        throw config_error("config error at /study/kind: the expressivity command expects \"expressivity\"");
    }
    Rng rng(cfg.training.seed);
    const std::vector<RankReport> reports =
        expressivity_study(cfg.study.ancilla_configs, cfg.study.expressivity_layers, cfg.study.expressivity_samples,
                           rng, workers, cfg.study.rank_tolerance, cfg.gen_qubits);

    auto find_report = [&reports](AncillaConfig c) -> const RankReport * {
        for (const auto &r : reports) {
            if (r.config == c) {
                return &r;
            }
        }
        return nullptr;
    };
    const RankReport *r1 = find_report(AncillaConfig::A1);
    const RankReport *r3 = find_report(AncillaConfig::A3);
    const RankReport *r4 = find_report(AncillaConfig::A4);

    nlohmann::json verdict;
    verdict["schema_version"] = schema_version;
    verdict["ordering"] = "a4>a3>a1";
    if (r1 != nullptr && r3 != nullptr && r4 != nullptr) {
        const bool ordering_pass =
            r4->generic_rank > r3->generic_rank && r3->generic_rank > r1->generic_rank;
        const bool zero_equal =
            r4->zero_param_rank == r3->zero_param_rank && r3->zero_param_rank == r1->zero_param_rank;
        verdict["ordering_pass"] = ordering_pass;
        verdict["zero_ranks_equal"] = zero_equal;
    } else {
        verdict["ordering_pass"] = nullptr;
        verdict["zero_ranks_equal"] = nullptr;
    }
    nlohmann::json generic = nlohmann::json::object();
    nlohmann::json zero = nlohmann::json::object();
    for (const auto &r : reports) {
        generic[ancilla_config_name(r.config)] = r.generic_rank;
        zero[ancilla_config_name(r.config)] = r.zero_param_rank;
    }
    verdict["generic_ranks"] = generic;
    verdict["zero_param_ranks"] = zero;

    const std::filesystem::path out_dir(cfg.output_directory);
    if (cfg.write_json) {
        nlohmann::json j;
        j["schema_version"] = schema_version;
        j["config_hash"] = hash_hex(experiment_config_to_json(cfg).dump());
        j["reports"] = nlohmann::json::array();
        for (const auto &r : reports) {
            j["reports"].push_back(rank_report_to_json(r));
        }
        j["verdict"] = verdict;
        write_text_file(out_dir / "expressivity.json", j.dump(2) + "\n");
        write_text_file(out_dir / "expressivity_verdict.json", verdict.dump(2) + "\n");
    }
    if (cfg.write_csv) {
        write_text_file(out_dir / "expressivity_ranks.csv", rank_reports_to_csv(reports));
    }

    for (const auto &r : reports) {
        std::cout << "config " << ancilla_config_name(r.config) << ": generic rank " << r.generic_rank
                  << " (zero-parameter rank " << r.zero_param_rank << ", exceptions "
                  << format_double(r.exception_fraction) << ")\n";
    }
    if (verdict["ordering_pass"].is_boolean()) {
        std::cout << "rank ordering a4>a3>a1: " << (verdict["ordering_pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "expressivity study finished (artifacts in " << out_dir.string() << ")\n";
    return exit_ok;
}

} // namespace qgan
