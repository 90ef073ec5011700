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

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qgan/cli/commands.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::int64_t seed = -1;
    int workers = 0;
    std::string out_dir;
};

void add_common_options(CLI::App *cmd, CommonOptions &opts) {
    cmd->add_option("--config", opts.config_path, "Path to the experiment config file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "Override the seed from the config file");
    cmd->add_option("--workers", opts.workers, "Worker threads (default: hardware concurrency)");
    cmd->add_option("--out", opts.out_dir, "Override the output directory from the config file");
}

int dispatch(const CommonOptions &opts, int (*command)(const qgan::ExperimentConfig &, int)) {
    try {
        qgan::ExperimentConfig cfg = qgan::load_experiment_config(opts.config_path);
        if (opts.seed >= 0) {
            cfg.training.seed = static_cast<std::uint64_t>(opts.seed);
        }
        if (!opts.out_dir.empty()) {
            cfg.output_directory = opts.out_dir;
        }
        int workers = opts.workers;
        if (workers <= 0) {
            workers = static_cast<int>(std::thread::hardware_concurrency());
            if (workers <= 0) {
                workers = 1;
            }
        }
        return command(cfg, workers);
    } catch (const qgan::config_error &err) {
        std::cerr << err.what() << "\n";
        return qgan::exit_config_error;
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return qgan::exit_runtime_error;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Adversarial unitary learning on Choi states, with ancilla-assisted generators"};
    app.require_subcommand(1);

    CommonOptions train_opts;
    CLI::App *train = app.add_subcommand("train", "Run one seeded adversarial training");
    add_common_options(train, train_opts);

    CommonOptions sweep_opts;
    CLI::App *sweep = app.add_subcommand("sweep", "Run a configured sweep of seeded training batches");
    add_common_options(sweep, sweep_opts);

    CommonOptions expr_opts;
    CLI::App *expressivity = app.add_subcommand("expressivity", "Run the Jacobian-rank study");
    add_common_options(expressivity, expr_opts);

    CLI11_PARSE(app, argc, argv);

    if (train->parsed()) {
        return dispatch(train_opts, qgan::cmd_train);
    }
    if (sweep->parsed()) {
        return dispatch(sweep_opts, qgan::cmd_sweep);
    }
    return dispatch(expr_opts, qgan::cmd_expressivity);
}
