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

#include "dgrading/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dgrading {

namespace {

constexpr double kDecomposeTol = 1e-12;
constexpr double kPrintedTol = 1e-10;

AlgebraElement build_symbolic(const Hopping& h, const GradingParams& p, const ChainSpec& chain) {
    AlgebraElement out(p.d);
    const int len = chain.length();
    for (int z = 0; z < len; ++z) {
        for (const auto& [x, c] : h.coefficients()) {
            const int w = z + x;
            if (!chain.contains(w)) continue;
            out.add_term(dressed_weyl(z, 1, p, chain) * dressed_weyl(w, -1, p, chain), c);
        }
    }
    return out.pruned(0.0);
}

std::string model_params(const QuadraticModel& m) {
    std::ostringstream os;
    os << "d=" << m.params().d << " j+=" << m.params().j_plus << " j-=" << m.params().j_minus
       << " L=" << m.chain().length();
    return os.str();
}

}  // namespace

struct QuadraticModel::Cache {
    std::once_flag dense_once;
    std::once_flag spectrum_once;
    std::unique_ptr<DenseOperator> dense;
    std::vector<EnergySector> sectors;
};

QuadraticModel::QuadraticModel(Hopping hopping, GradingParams params, ChainSpec chain)
    : hopping_(std::move(hopping)),
      params_(params),
      chain_(chain),
      hamiltonian_(params.d),
      cache_(std::make_shared<Cache>()) {
    if (params_.d != chain_.d()) throw std::invalid_argument("QuadraticModel: grading and chain dimensions differ");
    if (hopping_.support_diameter() >= chain_.length()) {
        throw std::invalid_argument("QuadraticModel: hopping support diameter " +
                                    std::to_string(hopping_.support_diameter()) + " does not fit a chain of length " +
                                    std::to_string(chain_.length()));
    }
    hamiltonian_ = build_symbolic(hopping_, params_, chain_);
}

const DenseOperator& QuadraticModel::dense_hamiltonian() const {
    std::call_once(cache_->dense_once,
                   [this] { cache_->dense = std::make_unique<DenseOperator>(realize(hamiltonian_, chain_)); });
    return *cache_->dense;
}

const std::vector<EnergySector>& QuadraticModel::spectrum() const {
    std::call_once(cache_->spectrum_once, [this] {
        const auto& h = dense_hamiltonian().matrix();
        const auto groups = sector_indices(chain_);
        Eigen::MatrixXcd outside = h;
        for (const auto& g : groups) {
            const Eigen::MatrixXcd block = h(g, g);
            outside(g, g).setZero();
            const Eigen::MatrixXcd herm = 0.5 * (block + block.adjoint());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
            if (es.info() != Eigen::Success) throw std::runtime_error("QuadraticModel: eigendecomposition failed");
            cache_->sectors.push_back({g, es.eigenvalues(), es.eigenvectors()});
        }
        const double leak = outside.norm();
        if (leak > 1e-12 * std::max(1.0, h.norm())) {
            throw std::logic_error("QuadraticModel: hamiltonian couples gauge sectors");
        }
    });
    return cache_->sectors;
}

QuadraticModel build_hamiltonian(const Hopping& hopping, const GradingParams& params, const ChainSpec& chain) {
    return QuadraticModel(hopping, params, chain);
}

EvolvedObservable::EvolvedObservable(const QuadraticModel& model, const DenseOperator& a)
    : model_(&model), initial_(a) {
    if (!(a.chain() == model.chain())) throw std::invalid_argument("EvolvedObservable: chain mismatch");
    const auto& sectors = model.spectrum();
    const int d = static_cast<int>(sectors.size());
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const auto& sr = sectors[static_cast<std::size_t>(r)];
            const auto& sc = sectors[static_cast<std::size_t>(c)];
            const Eigen::MatrixXcd raw = a.matrix()(sr.basis, sc.basis);
            if (raw.isZero(0.0)) continue;
            blocks_.push_back({r, c, sr.vectors.adjoint() * raw * sc.vectors});
        }
    }
}

DenseOperator EvolvedObservable::at(double t) const {
    if (t == 0.0) return initial_;
    const auto& sectors = model_->spectrum();
    const ChainSpec& chain = model_->chain();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(chain.dim(), chain.dim());
    for (const Block& blk : blocks_) {
        const auto& sr = sectors[static_cast<std::size_t>(blk.r)];
        const auto& sc = sectors[static_cast<std::size_t>(blk.c)];
        Eigen::MatrixXcd m = blk.rotated;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::complex<double> pj = std::polar(1.0, -sc.energies(j) * t);
            for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) *= std::polar(1.0, sr.energies(i) * t) * pj;
        }
        out(sr.basis, sc.basis) = sr.vectors * m * sc.vectors.adjoint();
    }
    return {chain, std::move(out)};
}

DenseOperator heisenberg_evolve(const DenseOperator& a, const QuadraticModel& model, double t) {
    if (t == 0.0) return a;
    return EvolvedObservable(model, a).at(t);
}

DenseOperator heisenberg_evolve(const AlgebraElement& a, const QuadraticModel& model, double t) {
    return heisenberg_evolve(realize(a, model.chain()), model, t);
}

bool LightConeGuard::admits(int lo, int hi, double t, const ChainSpec& chain) const {
    const double reach = speed * std::abs(t);
    return lo - reach >= 1.0 && hi + reach <= chain.length() - 2.0;
}

double LightConeGuard::horizon(int lo, int hi, const ChainSpec& chain) const {
    const double room = std::min(lo - 1, chain.length() - 2 - hi);
    if (room < 0) return 0.0;
    if (speed == 0.0) return std::numeric_limits<double>::infinity();
    return room / speed;
}

LightConeGuard light_cone(const QuadraticModel& model) { return {model.hopping().lieb_robinson_speed()}; }

double pre_recurrence_time(const QuadraticModel& model) {
    const double v = model.hopping().lieb_robinson_speed();
    if (v == 0.0) return std::numeric_limits<double>::infinity();
    return model.chain().length() / v;
}

DecaySeries commutator_decay(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                             const std::vector<double>& t_grid) {
    DecaySeries out;
    out.a_gauge_invariant = is_gauge_invariant(a);
    out.b_gauge_invariant = is_gauge_invariant(b);
    std::vector<double> ts = t_grid;
    std::sort(ts.begin(), ts.end());
    const DenseOperator bd = realize(b, model.chain());
    const EvolvedObservable ev(model, realize(a, model.chain()));
    out.series.reserve(ts.size());
    for (double t : ts) out.series.emplace_back(t, op_norm(commutator(ev.at(t), bd)));
    return out;
}

std::vector<double> tail_envelope(const std::vector<std::pair<double, double>>& series, double t_max) {
    std::vector<double> env(series.size(), 0.0);
    double run = 0.0;
    for (std::size_t i = series.size(); i-- > 0;) {
        if (series[i].first <= t_max) run = std::max(run, series[i].second);
        env[i] = run;
    }
    return env;
}

AlgebraElement smeared_operator(const OneParticleVector& f, const GradingParams& params, const ChainSpec& chain) {
    if (f.d() != params.d) throw std::invalid_argument("smeared_operator: dimension mismatch");
    if (f.grid() < chain.length()) throw std::invalid_argument("smeared_operator: grid shorter than chain");
    AlgebraElement out(params.d);
    for (int x = 0; x < chain.length(); ++x) {
        for (int j = 0; j < params.d; ++j) {
            const auto c = f.at(x, j);
            if (c != 0.0) out.add_term(dressed_weyl(x, j, 1, params, chain), c);
        }
    }
    return out;
}

OneParticleVector smeared_coefficients(const DenseOperator& a, const GradingParams& params, int grid) {
    const ChainSpec& chain = a.chain();
    if (grid < chain.length()) throw std::invalid_argument("smeared_coefficients: grid shorter than chain");
    OneParticleVector out(params.d, grid);
    for (int x = 0; x < chain.length(); ++x) {
        for (int j = 0; j < params.d; ++j) out.set(x, j, hs_coefficient(dressed_weyl(x, j, 1, params, chain), a));
    }
    return out;
}

std::optional<std::vector<Hopping>> quasifree_generator(const QuadraticModel& model) {
    if (model.params().d != 2) return std::nullopt;
    std::vector<Hopping> gens(2);
    if (model.params().exchange_exponent() == 1) {
        std::map<int, Hopping::Coeff> eff;
        for (const auto& [x, c] : model.hopping().coefficients()) {
            if (x == 0) continue;
            eff[x] += -2.0 * c;
            eff[-x] += 2.0 * c;
        }
        gens[0] = Hopping(eff);
    }
    return gens;
}

OneParticleVector evolve_sectors(const OneParticleVector& f, const std::vector<Hopping>& generators, double t) {
    if (static_cast<int>(generators.size()) != f.d()) throw std::invalid_argument("evolve_sectors: one hopping per charge");
    OneParticleVector out(f.d(), f.grid());
    for (int j = 0; j < f.d(); ++j) {
        OneParticleVector col(f.d(), f.grid());
        for (int r = 0; r < f.grid(); ++r) col.set(f.site_of_row(r), j, f.position()(r, j));
        const OneParticleVector moved = generators[j].is_zero() ? col : evolve(col, generators[j], t);
        for (int r = 0; r < f.grid(); ++r) out.set(moved.site_of_row(r), j, moved.position()(r, j));
    }
    return out;
}

SpanResidual span_residual(const QuadraticModel& model, const OneParticleVector& f) {
    const ChainSpec& chain = model.chain();
    const DenseOperator wf = realize(smeared_operator(f, model.params(), chain), chain);
    const DenseOperator deriv = std::complex<double>(0.0, 1.0) * commutator(model.dense_hamiltonian(), wf);
    OneParticleVector coeffs = smeared_coefficients(deriv, model.params(), std::max(f.grid(), chain.length()));
    const DenseOperator proj = realize(smeared_operator(coeffs, model.params(), chain), chain);
    const double dn = deriv.frobenius_norm();
    SpanResidual out{0.0, dn / std::sqrt(static_cast<double>(chain.dim())), std::move(coeffs)};
    // A vanishing derivative stays in the span trivially.
    if (out.derivative_norm > 1e-12) out.relative_residual = (deriv - proj).frobenius_norm() / dn;
    return out;
}

std::vector<AuditRow> printed_commutator_oracle(const QuadraticModel& model, int origin, int x, int z) {
    const GradingParams& p = model.params();
    const ChainSpec& chain = model.chain();
    const int d = p.d;
    const double two_pi = 2.0 * std::numbers::pi;
    if (x <= 0 || !chain.contains(origin) || !chain.contains(origin + x) || !chain.contains(origin - x)) {
        throw std::invalid_argument("printed_commutator_oracle: sites outside chain");
    }
    std::ostringstream ps;
    ps << model_params(model) << " o=" << origin << " x=" << x << " z=" << z;
    const std::string prm = ps.str();

    std::vector<AuditRow> rows;
    const WeylMonomial hop = dressed_weyl(origin, -1, p, chain) * dressed_weyl(origin + x, 1, p, chain);
    const AlgebraElement hop_e(hop);

    auto audit = [&](const std::string& id, const AlgebraElement& lhs_a, const AlgebraElement& lhs_b,
                     const AlgebraElement& printed) {
        const AlgebraElement symbolic = elem_commutator(lhs_a, lhs_b).pruned(kDecomposeTol);
        const DenseOperator dense = commutator(realize(lhs_a, chain), realize(lhs_b, chain));
        const AlgebraElement oracle = decompose(dense, kDecomposeTol);
        const double sym_dev = symbolic.max_abs_difference(oracle);
        rows.push_back(exact_row(id + "_symbolic", prm, sym_dev < 1e-12, sym_dev));
        const double dev = printed.pruned(kDecomposeTol).max_abs_difference(oracle);
        rows.push_back(printed_row(id, prm, dev < kPrintedTol, dev, oracle.to_string(8)));
    };

    // Intermediate site: claimed reduction to a local clock commutator.
    if (chain.contains(origin + z)) {
        const int s = origin + z;
        const AlgebraElement target(dressed_weyl(s, 1, p, chain));
        const std::complex<double> pre = std::polar(1.0, two_pi * (p.j_plus + p.j_minus) / d);
        const AlgebraElement printed =
            pre * elem_commutator(AlgebraElement(WeylMonomial::single(d, s, p.j_plus + p.j_minus, 0)), target);
        audit(z > 0 && z < x ? "hopping_commutator_inner" : "hopping_commutator_outer", hop_e, target, printed);
    }
    {
        const AlgebraElement target(dressed_weyl(origin, 1, p, chain));
        const AlgebraElement printed(
            WeylMonomial::single(d, origin + x, p.j_minus, 0) * dressed_weyl(origin + x, 1, p, chain),
            std::cos(two_pi * p.j_plus / d));
        audit("hopping_commutator_left", hop_e, target, printed);
    }
    {
        const AlgebraElement target(dressed_weyl(origin + x, 1, p, chain));
        const AlgebraElement printed(
            WeylMonomial::single(d, origin + x, -p.j_minus, 0) * dressed_weyl(origin, 1, p, chain),
            std::cos(-two_pi * p.j_plus / d));
        audit("hopping_commutator_right", hop_e + elem_adjoint(hop_e), target, printed);
    }

    // Time derivative at the origin under the full model.
    {
        const DenseOperator w0 = realize(dressed_weyl(origin, 1, p, chain), chain);
        const DenseOperator deriv = std::complex<double>(0.0, 1.0) * commutator(model.dense_hamiltonian(), w0);
        const AlgebraElement oracle = decompose(deriv, kDecomposeTol);
        const AlgebraElement symbolic =
            (std::complex<double>(0.0, 1.0) * elem_commutator(model.hamiltonian(), dressed_weyl(origin, 1, p, chain)))
                .pruned(kDecomposeTol);
        const double sym_dev = symbolic.max_abs_difference(oracle);
        rows.push_back(exact_row("clock_commutator_symbolic", prm, sym_dev < 1e-12, sym_dev));
        const auto pair = [&](double coeff) {
            AlgebraElement e(d);
            e.add_term(dressed_weyl(origin + x, 2 * p.j_plus, 1, p, chain), coeff);
            e.add_term(dressed_weyl(origin - x, 2 * p.j_plus, 1, p, chain), coeff);
            return e.pruned(kDecomposeTol);
        };
        const double dev_int = pair(std::cos(two_pi * p.j_plus)).max_abs_difference(oracle);
        const double dev_frac = pair(std::cos(two_pi * p.j_plus / d)).max_abs_difference(oracle);
        rows.push_back(printed_row("clock_commutator_integer_angle", prm, dev_int < kPrintedTol, dev_int, oracle.to_string(8)));
        rows.push_back(printed_row("clock_commutator_fractional_angle", prm, dev_frac < kPrintedTol, dev_frac, oracle.to_string(8)));
    }
    return rows;
}

std::vector<SpinReconstruction> reconstruct_spin_evolution(const QuadraticModel& model, int x,
                                                           const std::vector<double>& t_grid) {
    const GradingParams& p = model.params();
    const ChainSpec& chain = model.chain();
    const int d = p.d;
    const WeylMonomial clock = WeylMonomial::single(d, x, 1, 0);
    const WeylMonomial up = dressed_weyl(x, 1, p, chain);
    const WeylMonomial rest = clock * dressed_weyl(x, -1, p, chain);

    // up * rest is clock up to a power of omega; read it off the phase exponent.
    const WeylMonomial prod = up * rest;
    if (prod.sites() != clock.sites()) throw std::logic_error("reconstruct_spin_evolution: factors do not recombine");
    const long q = floor_mod(clock.phase().exponent() - prod.phase().exponent(), 2L * d);
    if (q % 2 != 0) throw std::logic_error("reconstruct_spin_evolution: prefactor is not a power of omega");

    const EvolvedObservable ev_clock(model, realize(clock, chain));
    const EvolvedObservable ev_up(model, realize(up, chain));
    const EvolvedObservable ev_rest(model, realize(rest, chain));
    const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    std::vector<SpinReconstruction> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        const DenseOperator lhs = ev_clock.at(t);
        const DenseOperator u = ev_up.at(t);
        const DenseOperator r = ev_rest.at(t);
        SpinReconstruction rec;
        rec.prefactor_exponent = static_cast<int>(q / 2);
        rec.deviation_product = lhs.max_abs_difference(omega * (u * r));
        rec.deviation_reversed = lhs.max_abs_difference(r * u);
        out.push_back(rec);
    }
    return out;
}

SpinReconstruction reconstruct_spin_evolution(const QuadraticModel& model, int x, double t) {
    return reconstruct_spin_evolution(model, x, std::vector<double>{t}).front();
}

}  // namespace dgrading
