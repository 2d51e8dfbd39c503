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

#ifndef GRADING_LAB_COMMANDS_HPP
#define GRADING_LAB_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgrading/dynamics.hpp"
#include "lab/config.hpp"
#include "lab/csv.hpp"

namespace lab {

enum ExitCode : int { kOk = 0, kAssertionFailure = 1, kConfigError = 2, kCapExceeded = 3 };

struct RunOptions {
    std::string out;                     // overrides config.output
    std::optional<std::int64_t> cap;     // overrides config.cap
    std::uint64_t seed = 1;
};

dgrading::GradingParams grading_of(const ExperimentConfig& c);
dgrading::Hopping hopping_of(const ExperimentConfig& c);
dgrading::ChainSpec chain_of(const ExperimentConfig& c);

/// Gauge-invariant dressed bilinears Wbar_x Wbar_{x+1}^dagger and Wbar_y Wbar_{y+1}^dagger
/// against the bare W_x(0,1), W_y(0,1), with y - x = separation, centred in the chain.
struct DecayContrast {
    int x = 0;
    int y = 0;
    double window_end = 0.0;
    dgrading::DecaySeries gauge_invariant;
    dgrading::DecaySeries bare;
    std::vector<double> gauge_invariant_envelope;
    std::vector<double> bare_envelope;
};

DecayContrast decay_contrast(const ExperimentConfig& c);

/// Each command returns a finished table; `verify` also reports whether every
/// exact-tier row held.
CsvTable run_verify(const ExperimentConfig& c, std::uint64_t seed, bool* all_exact = nullptr);
CsvTable run_evolve(const ExperimentConfig& c);
CsvTable run_decay(const ExperimentConfig& c);
CsvTable run_block(const ExperimentConfig& c);
CsvTable run_report(const std::vector<std::string>& csv_paths);

/// Loads the config, runs `command`, writes the CSV and maps failures to exit
/// codes; diagnostics go to `err`.
int run_command(const std::string& command, const std::string& config_path, const std::vector<std::string>& inputs,
                const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace lab

#endif  // GRADING_LAB_COMMANDS_HPP
