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

#include "dgrading/states.hpp"

#include <algorithm>
#include <cmath>

namespace dgrading {

std::complex<double> trace_state(const AlgebraElement& a) { return a.coefficient(SiteMap{}); }

std::complex<double> trace_state(const DenseOperator& a) { return a.normalized_trace(); }

CorrelationSeries two_point(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                            const std::vector<double>& t_grid, std::string a_label, std::string b_label) {
    CorrelationSeries out{std::move(a_label), std::move(b_label), t_grid, {}};
    std::sort(out.t.begin(), out.t.end());
    const ChainSpec& chain = model.chain();
    // omega(A tau_t B) = (1/N) sum over sector pairs of
    //   sum_{i,j} At_{cr}(j,i) Bt_{rc}(i,j) e^{i(E_{r,i} - E_{c,j}) t}
    // with At, Bt the energy-basis blocks.
    const EvolvedObservable ea(model, realize(a, chain));
    const EvolvedObservable eb(model, realize(b, chain));
    struct Weight {
        int r, c;
        Eigen::MatrixXcd w;
    };
    std::vector<Weight> weights;
    for (const auto& bb : eb.blocks()) {
        for (const auto& ab : ea.blocks()) {
            if (ab.r == bb.c && ab.c == bb.r) weights.push_back({bb.r, bb.c, ab.rotated.transpose().cwiseProduct(bb.rotated)});
        }
    }
    const auto& sectors = model.spectrum();
    const std::complex<double> disconnected = trace_state(a) * trace_state(b);
    const double n = static_cast<double>(chain.dim());
    for (double t : out.t) {
        std::vector<Eigen::VectorXcd> phase;
        for (const auto& s : sectors) {
            Eigen::VectorXcd p(s.energies.size());
            for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = std::polar(1.0, s.energies(i) * t);
            phase.push_back(std::move(p));
        }
        std::complex<double> acc = 0.0;
        for (const auto& w : weights) {
            acc += (phase[static_cast<std::size_t>(w.r)].transpose() * w.w *
                    phase[static_cast<std::size_t>(w.c)].conjugate())(0, 0);
        }
        out.values.push_back(acc / n - disconnected);
    }
    return out;
}

ClusteringReport clustering_report(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                                   const std::vector<double>& t_grid, double window_end) {
    ClusteringReport out;
    out.series = two_point(a, b, model, t_grid);
    out.window_end = window_end < 0.0 ? pre_recurrence_time(model) : window_end;
    std::vector<std::pair<double, double>> mags;
    for (std::size_t i = 0; i < out.series.t.size(); ++i) mags.emplace_back(out.series.t[i], std::abs(out.series.values[i]));
    out.envelope = tail_envelope(mags, out.window_end);
    for (const auto& [t, m] : mags) {
        if (t <= out.window_end) out.peak = std::max(out.peak, m);
    }
    out.ratio_to_peak.resize(mags.size(), 0.0);
    for (std::size_t i = 0; i < mags.size(); ++i) {
        out.ratio_to_peak[i] = out.peak > 0.0 ? out.envelope[i] / out.peak : 0.0;
        if (mags[i].first <= out.window_end) out.final_ratio = out.ratio_to_peak[i];
    }
    return out;
}

}  // namespace dgrading
