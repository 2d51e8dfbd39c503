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

#ifndef DGRADING_STATES_HPP
#define DGRADING_STATES_HPP

// The tracial state omega(A) = Tr(A) / d^L and correlations under the chain
// dynamics. On the symbolic side omega is the identity coefficient.

#include <complex>
#include <string>
#include <vector>

#include "dgrading/dense.hpp"
#include "dgrading/dynamics.hpp"
#include "dgrading/weyl.hpp"

namespace dgrading {

std::complex<double> trace_state(const AlgebraElement& a);
std::complex<double> trace_state(const DenseOperator& a);

struct CorrelationSeries {
    std::string a_label;
    std::string b_label;
    std::vector<double> t;
    std::vector<std::complex<double>> values;  // omega(A tau_t B) - omega(A) omega(B)
};

CorrelationSeries two_point(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                            const std::vector<double>& t_grid, std::string a_label = "A", std::string b_label = "B");

struct ClusteringReport {
    CorrelationSeries series;
    double window_end = 0.0;
    double peak = 0.0;
    std::vector<double> envelope;        // running max of |C| over [t, window_end]
    std::vector<double> ratio_to_peak;   // envelope / peak
    double final_ratio = 0.0;            // ratio at the last t inside the window
};

/// `window_end` defaults to the pre-recurrence time of the model when negative.
ClusteringReport clustering_report(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                                   const std::vector<double>& t_grid, double window_end = -1.0);

}  // namespace dgrading

#endif  // DGRADING_STATES_HPP
