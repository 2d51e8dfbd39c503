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

#ifndef GRADING_LAB_CONFIG_HPP
#define GRADING_LAB_CONFIG_HPP

// Flat `key = value` experiment files. '#' starts a comment, blank lines are
// skipped, every key may appear at most once and unknown keys are errors.
//
//   d          local dimension (>= 2)
//   L          chain length
//   j_plus     right string exponent
//   j_minus    left string exponent
//   hopping    comma-separated offset:re[:im] entries, e.g. 1:0:0.5,-1:0:-0.5
//   grid_n     momentum grid size for one-particle work
//   t_grid     start,stop,count
//   experiment free label; `sup_decay` switches `decay` to the one-particle series
//   output     CSV path (the --out flag wins)
//   cap        dense dimension cap
//   block_k    block size for `block`
//   fit_start, fit_stop   fit window for sup_decay
//   separation distance between the two observables in `decay`

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lab {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double start = 0.0;
    double stop = 2.0;
    int count = 21;

    std::vector<double> points() const;
    bool operator==(const TimeGrid&) const = default;
};

struct ExperimentConfig {
    int d = 3;
    int L = 5;
    int j_plus = 1;
    int j_minus = 0;
    std::map<int, std::complex<double>> hopping{{-1, {0.5, 0.0}}, {1, {0.5, 0.0}}};
    int grid_n = 1024;
    TimeGrid t_grid;
    std::string experiment = "verify";
    std::string output;
    std::int64_t cap = 4096;
    int block_k = 1;
    double fit_start = 10.0;
    double fit_stop = 100.0;
    int separation = 1;

    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string to_canonical(const ExperimentConfig& config);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace lab

#endif  // GRADING_LAB_CONFIG_HPP
