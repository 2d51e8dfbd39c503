// Copyright 2026 The dgrading Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lab/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"grading_lab: experiments on d-graded Jordan-Wigner chains"};
    app.require_subcommand(1, 1);

    std::string config;
    std::vector<std::string> inputs;
    lab::RunOptions options;
    std::int64_t cap = 0;

    const auto common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", config, "experiment config file");
        if (needs_config) opt->required()->check(CLI::ExistingFile);
        sub->add_option("--out", options.out, "CSV output path ('-' for stdout)");
        sub->add_option("--cap", cap, "dense dimension cap")->check(CLI::PositiveNumber);
        sub->add_option("--seed", options.seed, "seed for randomized sampling");
    };
    common(app.add_subcommand("verify", "symbolic relations and oracle comparisons"), true);
    common(app.add_subcommand("evolve", "Heisenberg evolution checks"), true);
    common(app.add_subcommand("decay", "commutator or one-particle decay series"), true);
    common(app.add_subcommand("block", "site blocking and gauge containment"), true);
    auto* report = app.add_subcommand("report", "summarize earlier CSV outputs");
    common(report, false);
    report->add_option("inputs", inputs, "CSV files")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : lab::kConfigError;
    }
    if (cap > 0) options.cap = cap;
    const std::string command = app.get_subcommands().front()->get_name();
    return lab::run_command(command, config, inputs, options, std::cout, std::cerr);
}
