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
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgan/adversarial/train.hpp"
#include "qgan/ansatz/generator.hpp"
#include "qgan/common.hpp"
#include "qgan/sim/unitary.hpp"

namespace qgan {

/// Invalid or malformed experiment configuration. Reported with exit code 2
/// by the CLI, distinct from runtime failures.
class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class StudyKind { Single, AncillaSweep, TimingSweep, RestartSweep, Expressivity };

inline std::string study_kind_name(StudyKind k) {
    switch (k) {
    case StudyKind::Single:
        return "single";
    case StudyKind::AncillaSweep:
        return "ancilla_sweep";
    case StudyKind::TimingSweep:
        return "timing_sweep";
    case StudyKind::RestartSweep:
        return "restart_sweep";
    case StudyKind::Expressivity:
        return "expressivity";
    }
    return "single";
}

struct StudyConfig {
    StudyKind kind = StudyKind::Single;
    int runs_per_point = 30;
    std::vector<AncillaConfig> ancilla_configs = {AncillaConfig::A1, AncillaConfig::A2, AncillaConfig::A3,
                                                  AncillaConfig::A4};
    std::vector<InitMode> init_modes = {InitMode::Random, InitMode::Zero};
    std::vector<std::string> timings = {"start", "mid"};
    InitMode timing_init_mode = InitMode::Random;
    std::vector<double> ratios = {0.0, 0.25, 0.5, 0.75, 1.0};
    long insertion_iteration = -1; // -1: at the phase-1 boundary
    int expressivity_layers = 1;
    long expressivity_samples = 1000;
    double rank_tolerance = 1e-10;
};

struct ExperimentConfig {
    std::string target_hamiltonian = "zzz";
    double target_time = 1.0;
    int gen_qubits = 3;
    int gen_layers = 3;
    AncillaConfig gen_ancilla = AncillaConfig::None;
    TrainConfig training; // generator fields are filled from the block above
    StudyConfig study;
    std::string output_directory = "out";
    bool write_json = true;
    bool write_csv = true;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void config_fail(const std::string &path, const std::string &msg) {
    throw config_error("config error at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

inline void check_object(const json &j, const std::string &path) {
    if (!j.is_object()) {
        config_fail(path, "expected an object");
    }
}

inline void check_keys(const json &j, const std::string &path, std::initializer_list<const char *> allowed) {
    check_object(j, path);
    for (const auto &item : j.items()) {
        bool known = false;
        for (const char *key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            config_fail(path, "unknown key \"" + item.key() + "\"");
        }
    }
}

inline const json &require_key(const json &j, const std::string &path, const char *key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        config_fail(path, std::string("missing required key \"") + key + "\"");
    }
    return *it;
}

inline double get_number(const json &j, const std::string &path, const char *key, double fallback) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        config_fail(path + "/" + key, "expected a number");
    }
    return it->get<double>();
}

inline long get_integer(const json &j, const std::string &path, const char *key, long fallback) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_number_integer()) {
        config_fail(path + "/" + key, "expected an integer");
    }
    return it->get<long>();
}

inline std::uint64_t get_u64(const json &j, const std::string &path, const char *key, std::uint64_t fallback) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_number_integer() || (it->is_number_integer() && !it->is_number_unsigned() && it->get<long long>() < 0)) {
        config_fail(path + "/" + key, "expected a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

inline std::string get_string(const json &j, const std::string &path, const char *key, const std::string &fallback) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        config_fail(path + "/" + key, "expected a string");
    }
    return it->get<std::string>();
}

inline std::string require_string(const json &j, const std::string &path, const char *key) {
    const json &value = require_key(j, path, key);
    if (!value.is_string()) {
        config_fail(path + "/" + key, "expected a string");
    }
    return value.get<std::string>();
}

inline AncillaConfig get_ancilla(const json &j, const std::string &path, const char *key, AncillaConfig fallback) {
    const std::string name = get_string(j, path, key, ancilla_config_name(fallback));
    try {
        return parse_ancilla_config(name);
    } catch (const contract_error &) {
        config_fail(path + "/" + key, "expected one of none/a1/a2/a3/a4");
    }
}

inline InitMode get_init_mode(const json &j, const std::string &path, const char *key, InitMode fallback) {
    const std::string name = get_string(j, path, key, init_mode_name(fallback));
    try {
        return parse_init_mode(name);
    } catch (const contract_error &) {
        config_fail(path + "/" + key, "expected \"random\" or \"zero\"");
    }
}

inline std::vector<ScheduleEvent> parse_schedule(const json &j, const std::string &path) {
    if (!j.is_array()) {
        config_fail(path, "expected an array of events");
    }
    std::vector<ScheduleEvent> schedule;
    int idx = 0;
    for (const auto &entry : j) {
        const std::string entry_path = path + "/" + std::to_string(idx++);
        check_keys(entry, entry_path, {"event", "iteration", "config", "init_mode", "ratio"});
        ScheduleEvent ev;
        const std::string kind = require_string(entry, entry_path, "event");
        ev.iteration = get_integer(entry, entry_path, "iteration", 0);
        if (kind == "insert_ancilla") {
            ev.kind = ScheduleEventKind::InsertAncilla;
            ev.config = get_ancilla(entry, entry_path, "config", AncillaConfig::A4);
            ev.init_mode = get_init_mode(entry, entry_path, "init_mode", InitMode::Random);
        } else if (kind == "random_restart") {
            ev.kind = ScheduleEventKind::RandomRestart;
            ev.ratio = get_number(entry, entry_path, "ratio", 0.0);
        } else {
            config_fail(entry_path + "/event", "expected \"insert_ancilla\" or \"random_restart\"");
        }
        schedule.push_back(ev);
    }
    return schedule;
}

inline StudyKind parse_study_kind(const std::string &name, const std::string &path) {
    if (name == "single") {
        return StudyKind::Single;
    }
    if (name == "ancilla_sweep") {
        return StudyKind::AncillaSweep;
    }
    if (name == "timing_sweep") {
        return StudyKind::TimingSweep;
    }
    if (name == "restart_sweep") {
        return StudyKind::RestartSweep;
    }
    if (name == "expressivity") {
        return StudyKind::Expressivity;
    }
    config_fail(path, "unknown study kind \"" + name + "\"");
}

} // namespace detail

inline ExperimentConfig parse_experiment_config(const nlohmann::json &root) {
    using detail::check_keys;
    using detail::config_fail;
    using detail::require_key;

    ExperimentConfig cfg;
    check_keys(root, "", {"schema_version", "target", "generator", "training", "study", "output"});
    const long version = detail::get_integer(root, "", "schema_version", schema_version);
    if (version != schema_version) {
        config_fail("/schema_version", "unsupported version " + std::to_string(version));
    }

    const auto &target = require_key(root, "", "target");
    check_keys(target, "/target", {"hamiltonian", "time"});
    cfg.target_hamiltonian = detail::require_string(target, "/target", "hamiltonian");
    if (cfg.target_hamiltonian != "zzz") {
        config_fail("/target/hamiltonian", "only \"zzz\" is supported");
    }
    cfg.target_time = detail::get_number(target, "/target", "time", 1.0);

    if (const auto it = root.find("generator"); it != root.end()) {
        check_keys(*it, "/generator", {"qubits", "layers", "ancilla_config"});
        cfg.gen_qubits = static_cast<int>(detail::get_integer(*it, "/generator", "qubits", 3));
        cfg.gen_layers = static_cast<int>(detail::get_integer(*it, "/generator", "layers", 3));
        cfg.gen_ancilla = detail::get_ancilla(*it, "/generator", "ancilla_config", AncillaConfig::None);
    }

    if (const auto it = root.find("training"); it != root.end()) {
        const std::string p = "/training";
        check_keys(*it, p,
                   {"max_iters_phase1", "max_iters_phase2", "fidelity_threshold", "lr_generator",
                    "lr_discriminator", "disc_steps_per_iter", "gen_steps_per_iter", "clip_bound",
                    "max_pauli_weight", "seed", "schedule"});
        cfg.training.max_iters_phase1 = detail::get_integer(*it, p, "max_iters_phase1", 3000);
        cfg.training.max_iters_phase2 = detail::get_integer(*it, p, "max_iters_phase2", 3000);
        cfg.training.fidelity_threshold = detail::get_number(*it, p, "fidelity_threshold", 0.99);
        cfg.training.lr_generator = detail::get_number(*it, p, "lr_generator", 0.01);
        cfg.training.lr_discriminator = detail::get_number(*it, p, "lr_discriminator", 0.01);
        cfg.training.disc_steps_per_iter = static_cast<int>(detail::get_integer(*it, p, "disc_steps_per_iter", 1));
        cfg.training.gen_steps_per_iter = static_cast<int>(detail::get_integer(*it, p, "gen_steps_per_iter", 1));
        cfg.training.clip_bound = detail::get_number(*it, p, "clip_bound", 1.0);
        cfg.training.max_pauli_weight = static_cast<int>(detail::get_integer(*it, p, "max_pauli_weight", 2));
        cfg.training.seed = detail::get_u64(*it, p, "seed", 0);
        if (const auto sit = it->find("schedule"); sit != it->end()) {
            cfg.training.schedule = detail::parse_schedule(*sit, p + "/schedule");
        }
    }
    cfg.training.n_system_qubits = cfg.gen_qubits;
    cfg.training.n_layers = cfg.gen_layers;
    cfg.training.initial_ancilla = cfg.gen_ancilla;

    const auto &study = require_key(root, "", "study");
    {
        const std::string p = "/study";
        check_keys(study, p,
                   {"kind", "runs_per_point", "ancilla_configs", "init_modes", "timings", "init_mode", "ratios",
                    "insertion_iteration", "layers", "samples", "rank_tolerance"});
        cfg.study.kind = detail::parse_study_kind(detail::require_string(study, p, "kind"), p + "/kind");
        if (cfg.study.kind == StudyKind::Expressivity && study.find("ancilla_configs") == study.end()) {
            cfg.study.ancilla_configs = {AncillaConfig::A1, AncillaConfig::A3, AncillaConfig::A4};
        }
        cfg.study.runs_per_point = static_cast<int>(detail::get_integer(study, p, "runs_per_point", 30));
        if (cfg.study.runs_per_point < 1) {
            config_fail(p + "/runs_per_point", "must be at least 1");
        }
        if (const auto it = study.find("ancilla_configs"); it != study.end()) {
            if (!it->is_array() || it->empty()) {
                config_fail(p + "/ancilla_configs", "expected a non-empty array");
            }
            cfg.study.ancilla_configs.clear();
            for (const auto &entry : *it) {
                if (!entry.is_string()) {
                    config_fail(p + "/ancilla_configs", "expected strings");
                }
                const AncillaConfig c = [&] {
                    try {
                        return parse_ancilla_config(entry.get<std::string>());
                    } catch (const contract_error &) {
                        config_fail(p + "/ancilla_configs", "expected one of a1/a2/a3/a4");
                    }
                }();
                if (c == AncillaConfig::None) {
                    config_fail(p + "/ancilla_configs", "\"none\" is implicit as the reference point");
                }
                cfg.study.ancilla_configs.push_back(c);
            }
        }
        if (const auto it = study.find("init_modes"); it != study.end()) {
            if (!it->is_array() || it->empty()) {
                config_fail(p + "/init_modes", "expected a non-empty array");
            }
            cfg.study.init_modes.clear();
            for (const auto &entry : *it) {
                if (!entry.is_string()) {
                    config_fail(p + "/init_modes", "expected strings");
                }
                try {
                    cfg.study.init_modes.push_back(parse_init_mode(entry.get<std::string>()));
                } catch (const contract_error &) {
                    config_fail(p + "/init_modes", "expected \"random\" or \"zero\"");
                }
            }
        }
        if (const auto it = study.find("timings"); it != study.end()) {
            if (!it->is_array() || it->empty()) {
                config_fail(p + "/timings", "expected a non-empty array");
            }
            cfg.study.timings.clear();
            for (const auto &entry : *it) {
                if (!entry.is_string() || (entry.get<std::string>() != "start" && entry.get<std::string>() != "mid")) {
                    config_fail(p + "/timings", "expected \"start\" or \"mid\" entries");
                }
                cfg.study.timings.push_back(entry.get<std::string>());
            }
        }
        cfg.study.timing_init_mode = detail::get_init_mode(study, p, "init_mode", InitMode::Random);
        if (const auto it = study.find("ratios"); it != study.end()) {
            if (!it->is_array() || it->empty()) {
                config_fail(p + "/ratios", "expected a non-empty array");
            }
            cfg.study.ratios.clear();
            for (const auto &entry : *it) {
                if (!entry.is_number()) {
                    config_fail(p + "/ratios", "expected numbers");
                }
                const double r = entry.get<double>();
                if (r < 0.0 || r > 1.0) {
                    config_fail(p + "/ratios", "ratios must lie in [0, 1]");
                }
                cfg.study.ratios.push_back(r);
            }
        }
        cfg.study.insertion_iteration = detail::get_integer(study, p, "insertion_iteration", -1);
        cfg.study.expressivity_layers = static_cast<int>(detail::get_integer(study, p, "layers", 1));
        cfg.study.expressivity_samples = detail::get_integer(study, p, "samples", 1000);
        if (cfg.study.expressivity_samples < 1) {
            config_fail(p + "/samples", "must be at least 1");
        }
        cfg.study.rank_tolerance = detail::get_number(study, p, "rank_tolerance", 1e-10);
        if (cfg.study.rank_tolerance <= 0.0 || cfg.study.rank_tolerance >= 1.0) {
            config_fail(p + "/rank_tolerance", "must lie in (0, 1)");
        }
    }

    if (const auto it = root.find("output"); it != root.end()) {
        check_keys(*it, "/output", {"directory", "formats"});
        cfg.output_directory = detail::get_string(*it, "/output", "directory", "out");
        if (const auto fit = it->find("formats"); fit != it->end()) {
            if (!fit->is_array() || fit->empty()) {
                config_fail("/output/formats", "expected a non-empty array");
            }
            cfg.write_json = false;
            cfg.write_csv = false;
            for (const auto &entry : *fit) {
                if (!entry.is_string()) {
                    config_fail("/output/formats", "expected strings");
                }
                const std::string f = entry.get<std::string>();
                if (f == "json") {
                    cfg.write_json = true;
                } else if (f == "csv") {
                    cfg.write_csv = true;
                } else {
                    config_fail("/output/formats", "unknown format \"" + f + "\"");
                }
            }
        }
    }

    try {
        cfg.training.validate();
        build_generator_spec(cfg.gen_qubits, cfg.gen_layers, cfg.gen_ancilla);
    } catch (const contract_error &err) {
        throw config_error(std::string("config error: ") + err.what());
    }
    return cfg;
}

inline ExperimentConfig load_experiment_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path.string());
    }
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &err) {
        throw config_error("config parse error in " + path.string() + ": " + err.what());
    }
    return parse_experiment_config(root);
}

/// Canonical JSON of the effective configuration with all defaults
/// materialized; the basis for config hashes and provenance records.
inline nlohmann::json experiment_config_to_json(const ExperimentConfig &cfg) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["target"] = {{"hamiltonian", cfg.target_hamiltonian}, {"time", cfg.target_time}};
    j["generator"] = {{"qubits", cfg.gen_qubits},
                      {"layers", cfg.gen_layers},
                      {"ancilla_config", ancilla_config_name(cfg.gen_ancilla)}};
    nlohmann::json schedule = nlohmann::json::array();
    for (const auto &ev : cfg.training.schedule) {
        nlohmann::json e;
        e["event"] = schedule_event_name(ev.kind);
        e["iteration"] = ev.iteration;
        if (ev.kind == ScheduleEventKind::InsertAncilla) {
            e["config"] = ancilla_config_name(ev.config);
            e["init_mode"] = init_mode_name(ev.init_mode);
        } else {
            e["ratio"] = ev.ratio;
        }
        schedule.push_back(e);
    }
    j["training"] = {{"max_iters_phase1", cfg.training.max_iters_phase1},
                     {"max_iters_phase2", cfg.training.max_iters_phase2},
                     {"fidelity_threshold", cfg.training.fidelity_threshold},
                     {"lr_generator", cfg.training.lr_generator},
                     {"lr_discriminator", cfg.training.lr_discriminator},
                     {"disc_steps_per_iter", cfg.training.disc_steps_per_iter},
                     {"gen_steps_per_iter", cfg.training.gen_steps_per_iter},
                     {"clip_bound", cfg.training.clip_bound},
                     {"max_pauli_weight", cfg.training.max_pauli_weight},
                     {"seed", cfg.training.seed},
                     {"schedule", schedule}};
    nlohmann::json study;
    study["kind"] = study_kind_name(cfg.study.kind);
    study["runs_per_point"] = cfg.study.runs_per_point;
    switch (cfg.study.kind) {
    case StudyKind::Single:
        break;
    case StudyKind::AncillaSweep: {
        nlohmann::json configs = nlohmann::json::array();
        for (const auto c : cfg.study.ancilla_configs) {
            configs.push_back(ancilla_config_name(c));
        }
        nlohmann::json modes = nlohmann::json::array();
        for (const auto m : cfg.study.init_modes) {
            modes.push_back(init_mode_name(m));
        }
        study["ancilla_configs"] = configs;
        study["init_modes"] = modes;
        study["insertion_iteration"] = cfg.study.insertion_iteration;
        break;
    }
    case StudyKind::TimingSweep: {
        nlohmann::json configs = nlohmann::json::array();
        for (const auto c : cfg.study.ancilla_configs) {
            configs.push_back(ancilla_config_name(c));
        }
        study["ancilla_configs"] = configs;
        study["timings"] = cfg.study.timings;
        study["init_mode"] = init_mode_name(cfg.study.timing_init_mode);
        study["insertion_iteration"] = cfg.study.insertion_iteration;
        break;
    }
    case StudyKind::RestartSweep:
        study["ratios"] = cfg.study.ratios;
        break;
    case StudyKind::Expressivity: {
        nlohmann::json configs = nlohmann::json::array();
        for (const auto c : cfg.study.ancilla_configs) {
            configs.push_back(ancilla_config_name(c));
        }
        study["ancilla_configs"] = configs;
        study["layers"] = cfg.study.expressivity_layers;
        study["samples"] = cfg.study.expressivity_samples;
        study["rank_tolerance"] = cfg.study.rank_tolerance;
        break;
    }
    }
    j["study"] = study;
    nlohmann::json formats = nlohmann::json::array();
    if (cfg.write_json) {
        formats.push_back("json");
    }
    if (cfg.write_csv) {
        formats.push_back("csv");
    }
    j["output"] = {{"directory", cfg.output_directory}, {"formats", formats}};
    return j;
}

inline Matrix target_unitary_of(const ExperimentConfig &cfg) {
    // Parsing guarantees the kind; only the three-body Z interaction exists.
    return target_unitary_zzz(cfg.target_time);
}

} // namespace qgan
