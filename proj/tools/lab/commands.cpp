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

#include "lab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dgrading/blocking.hpp"
#include "dgrading/dressing.hpp"
#include "dgrading/states.hpp"
#include "dgrading/verify.hpp"

namespace lab {

using namespace dgrading;

namespace {

std::string fmt(double v) { return format_double(v); }
std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

void add_value(CsvTable& t, const std::string& key, double time, std::complex<double> v) {
    t.add_row({key, fmt(time), fmt(v.real()), fmt(v.imag())});
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTable sup_decay_table(const ExperimentConfig& c) {
    const Hopping h = hopping_of(c);
    const OneParticleVector f = OneParticleVector::delta(c.d, c.grid_n, 0, 0);
    const auto ts = c.t_grid.points();
    const SupDecay sd = sup_decay(f, h, ts, c.fit_start, c.fit_stop);
    CsvTable t({"series", "t", "value"});
    t.add_row({"fit_exponent", fmt(0.0), fmt(sd.exponent)});
    t.add_row({"fit_points", fmt(0.0), fmt(sd.fit_points)});
    const double norm0 = f.l2_norm();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        t.add_row({"sup_norm", fmt(sd.series[i].first), fmt(sd.series[i].second)});
        t.add_row({"l2_drift", fmt(ts[i]), fmt(std::abs(evolve(f, h, ts[i]).l2_norm() - norm0))});
    }
    t.sort_rows(1, 1);
    return t;
}

}  // namespace

GradingParams grading_of(const ExperimentConfig& c) { return GradingParams(c.d, c.j_plus, c.j_minus); }

Hopping hopping_of(const ExperimentConfig& c) {
    try {
        return Hopping(c.hopping);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("hopping: ") + e.what());
    }
}

ChainSpec chain_of(const ExperimentConfig& c) { return ChainSpec(c.d, c.L, c.cap); }

DecayContrast decay_contrast(const ExperimentConfig& c) {
    const ChainSpec chain = chain_of(c);
    const GradingParams p = grading_of(c);
    if (c.L < c.separation + 2) throw ConfigError("separation too large for the chain");
    const QuadraticModel model(hopping_of(c), p, chain);
    DecayContrast out;
    out.x = (c.L - 2 - c.separation) / 2;
    out.y = out.x + c.separation;
    out.window_end = pre_recurrence_time(model);
    const auto ts = c.t_grid.points();
    const AlgebraElement a(dressed_weyl(out.x, 1, p, chain) * dressed_weyl(out.x + 1, -1, p, chain));
    const AlgebraElement b(dressed_weyl(out.y, 1, p, chain) * dressed_weyl(out.y + 1, -1, p, chain));
    out.gauge_invariant = commutator_decay(a, b, model, ts);
    out.bare = commutator_decay(WeylMonomial::single(c.d, out.x, 0, 1), WeylMonomial::single(c.d, out.y, 0, 1), model, ts);
    out.gauge_invariant_envelope = tail_envelope(out.gauge_invariant.series, out.window_end);
    out.bare_envelope = tail_envelope(out.bare.series, out.window_end);
    return out;
}

CsvTable run_verify(const ExperimentConfig& c, std::uint64_t seed, bool* all_exact) {
    const auto rows = verify_suite(grading_of(c), chain_of(c), hopping_of(c), seed);
    if (all_exact) *all_exact = all_exact_rows_hold(rows);
    CsvTable t({"relation_id", "params", "status", "deviation", "oracle_payload"});
    for (const auto& r : rows) t.add_row({r.relation_id, r.params, to_string(r.status), fmt(r.deviation), r.oracle_payload});
    t.sort_rows(2);
    return t;
}

CsvTable run_evolve(const ExperimentConfig& c) {
    const ChainSpec chain = chain_of(c);
    const GradingParams p = grading_of(c);
    const QuadraticModel model(hopping_of(c), p, chain);
    const int centre = c.L / 2;
    const auto ts = c.t_grid.points();
    CsvTable t({"key", "t", "re", "im"});

    const AlgebraElement up(dressed_weyl(centre, 1, p, chain));
    const EvolvedObservable ev(model, realize(up, chain));
    const auto recs = reconstruct_spin_evolution(model, centre, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        add_value(t, "norm_drift", ts[i], std::abs(op_norm(ev.at(ts[i])) - 1.0));
        add_value(t, "reconstruct_product", ts[i], recs[i].deviation_product);
        add_value(t, "reconstruct_reversed", ts[i], recs[i].deviation_reversed);
    }
    const CorrelationSeries cs = two_point(elem_adjoint(up), up, model, ts);
    for (std::size_t i = 0; i < cs.t.size(); ++i) add_value(t, "two_point_centre", cs.t[i], cs.values[i]);

    const OneParticleVector f = OneParticleVector::delta(c.d, std::max(c.grid_n, 2 * c.L), centre, 0);
    add_value(t, "span_residual", 0.0, span_residual(model, f).relative_residual);

    if (const auto gens = quasifree_generator(model)) {
        const LightConeGuard guard = light_cone(model);
        const EvolvedObservable wf(model, realize(smeared_operator(f, p, chain), chain));
        for (double time : ts) {
            const OneParticleVector ft = evolve_sectors(f, *gens, time);
            const DenseOperator predicted = realize(smeared_operator(ft, p, chain), chain);
            add_value(t, "oracle_deviation", time, wf.at(time).max_abs_difference(predicted));
            add_value(t, "light_cone_admitted", time, guard.admits(centre, centre, time, chain) ? 1.0 : 0.0);
        }
    }
    t.sort_rows(1, 1);
    return t;
}

CsvTable run_decay(const ExperimentConfig& c) {
    if (c.experiment == "sup_decay") return sup_decay_table(c);
    const DecayContrast dc = decay_contrast(c);
    CsvTable t({"series", "t", "commutator_norm", "envelope", "in_window"});
    const auto emit = [&](const std::string& name, const DecaySeries& s, const std::vector<double>& env) {
        for (std::size_t i = 0; i < s.series.size(); ++i) {
            t.add_row({name, fmt(s.series[i].first), fmt(s.series[i].second), fmt(env[i]),
                       s.series[i].first <= dc.window_end ? "1" : "0"});
        }
    };
    emit("bare", dc.bare, dc.bare_envelope);
    emit("gauge_invariant", dc.gauge_invariant, dc.gauge_invariant_envelope);
    t.sort_rows(1, 1);
    return t;
}

CsvTable run_block(const ExperimentConfig& c) {
    const ChainSpec chain = chain_of(c);
    const GradingParams p = grading_of(c);
    const Hopping h = hopping_of(c);
    if (c.L % c.block_k != 0) throw ConfigError("block_k must divide L");
    AlgebraElement a = AlgebraElement::identity(c.d);
    if (!h.is_zero() && h.support_diameter() < c.L) a = QuadraticModel(h, p, chain).hamiltonian();
    const BlockReport rep = block_sites(a, c.block_k, chain);
    CsvTable t({"key", "value"});
    t.add_row({"block_size", fmt(rep.block_size)});
    t.add_row({"blocked_local_dimension", fmt(rep.blocked_chain.d())});
    t.add_row({"blocked_length", fmt(rep.blocked_chain.length())});
    t.add_row({"blocked_terms", fmt(rep.blocked.size())});
    t.add_row({"containment_deviation", fmt(rep.containment_deviation)});
    t.add_row({"gauge_order", fmt(rep.gauge_order)});
    t.add_row({"realization_deviation", fmt(rep.realization_deviation)});
    t.add_row({"spanning_set_size", fmt(rep.spanning_set_size)});
    t.add_row({"strictly_coarser", fmt(rep.strictly_coarser)});
    if (!h.is_zero()) {
        const ConstraintReport cr = sigma_constraint_check(h, c.block_k);
        t.add_row({"symbol_constraint_deviation", fmt(cr.deviation)});
        t.add_row({"symbol_constraint_coincide", cr.coincide ? "1" : "0"});
    }
    t.sort_rows(1);
    return t;
}

CsvTable run_report(const std::vector<std::string>& csv_paths) {
    std::vector<std::string> paths = csv_paths;
    std::sort(paths.begin(), paths.end());
    CsvTable out({"source", "header", "rows", "exact", "match", "mismatch", "fail"});
    for (const auto& path : paths) {
        CsvTable in = [&] {
            try {
                return parse_csv(read_file(path));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("'" + path + "': " + e.what());
            }
        }();
        std::size_t counts[4] = {0, 0, 0, 0};
        const auto& hdr = in.header();
        const auto it = std::find(hdr.begin(), hdr.end(), "status");
        if (it != hdr.end()) {
            const auto col = static_cast<std::size_t>(it - hdr.begin());
            for (const auto& r : in.rows()) {
                if (r[col] == "EXACT") ++counts[0];
                else if (r[col] == "MATCH") ++counts[1];
                else if (r[col] == "MISMATCH") ++counts[2];
                else if (r[col] == "FAIL") ++counts[3];
            }
        }
        std::string header;
        for (const auto& h : hdr) header += (header.empty() ? "" : ";") + h;
        out.add_row({path, header, fmt(in.rows().size()), fmt(counts[0]), fmt(counts[1]), fmt(counts[2]), fmt(counts[3])});
    }
    return out;
}

int run_command(const std::string& command, const std::string& config_path, const std::vector<std::string>& inputs,
                const RunOptions& options, std::ostream& out, std::ostream& err) {
    try {
        int code = kOk;
        std::string target = options.out;
        CsvTable table({""});
        if (command == "report") {
            if (inputs.empty()) throw ConfigError("report: no input CSV files");
            table = run_report(inputs);
        } else {
            if (config_path.empty()) throw ConfigError(command + ": --config is required");
            ExperimentConfig c = load_config(config_path);
            if (options.cap) c.cap = *options.cap;
            if (target.empty()) target = c.output;
            if (command == "verify") {
                bool exact = true;
                table = run_verify(c, options.seed, &exact);
                if (!exact) {
                    err << "verify: exact-tier relation failed\n";
                    code = kAssertionFailure;
                }
            } else if (command == "evolve") {
                table = run_evolve(c);
            } else if (command == "decay") {
                table = run_decay(c);
            } else if (command == "block") {
                table = run_block(c);
            } else {
                throw ConfigError("unknown command '" + command + "'");
            }
        }
        const std::string text = table.str();
        if (target.empty() || target == "-") {
            out << text;
        } else {
            std::ofstream f(target, std::ios::binary | std::ios::trunc);
            if (!f) throw ConfigError("cannot write '" + target + "'");
            f << text;
        }
        return code;
    } catch (const CapExceeded& e) {
        err << "error: dense dimension " << e.dimension() << " exceeds cap " << e.cap() << "\n";
        return kCapExceeded;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::out_of_range& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kAssertionFailure;
    }
}

}  // namespace lab
