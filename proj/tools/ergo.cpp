// Copyright 2026 The ergo authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ergo/experiments/experiments.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ergo::Error("cannot read config file " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Averages, van der Corput checks and spectral estimates for group actions"};
    app.set_version_flag("--version", ergo::artifact_version());
    app.require_subcommand(1);

    std::string config_path, out_path, format = "table_text";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> budget;
    for (const auto& name : ergo::experiment_names()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", config_path, "key = value config file; defaults when omitted")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "report file; stdout when omitted");
        sub->add_option("--format", format, "table_text or structured_text")->check(CLI::IsMember({"table_text", "structured_text"}));
        sub->add_option("--seed", seed, "overrides the config seed");
        sub->add_option("--budget", budget, "overrides the config budget");
    }
    CLI11_PARSE(app, argc, argv);

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        ergo::ExperimentConfig config = ergo::ExperimentConfig::defaults(name);
        if (!config_path.empty()) {
            config = ergo::ExperimentConfig::parse(read_file(config_path));
            if (config.experiment() != name)
                throw ergo::InvalidInput("config is for " + config.experiment() + ", not " + name);
        }
        if (seed) config.set_seed(*seed);
        if (budget) config.set_budget(*budget);
        const auto report = ergo::run_experiment(config);
        const auto fmt = ergo::parse_format(format);
        if (out_path.empty())
            std::cout << ergo::render(report, fmt);
        else
            ergo::emit_report(report, fmt, out_path);
        std::cerr << name << " finished in " << report.wall_clock << " s\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
