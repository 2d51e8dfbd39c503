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

#include "dgrading/one_particle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "dgrading/phase.hpp"

namespace dgrading {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact e^{2 pi i num / den} on the quarter points.
std::complex<double> turn(long num, long den) { return root_of_unity_2d(static_cast<int>(den), 2 * num); }

}  // namespace

Hopping::Hopping(std::map<int, Coeff> coefficients, double tol) {
    for (const auto& [x, c] : coefficients) {
        if (c != Coeff{}) h_.emplace(x, c);
    }
    for (const auto& [x, c] : h_) {
        if (std::abs(at(-x) - std::conj(c)) > tol) {
            throw std::invalid_argument("Hopping: not hermitian at offset " + std::to_string(x));
        }
    }
}

Hopping Hopping::nearest_neighbor(Coeff a) { return Hopping({{1, a}, {-1, std::conj(a)}}); }

Hopping::Coeff Hopping::at(int x) const {
    auto it = h_.find(x);
    return it == h_.end() ? Coeff{} : it->second;
}

int Hopping::support_diameter() const { return h_.empty() ? 0 : h_.rbegin()->first - h_.begin()->first; }

int Hopping::range() const {
    int r = 0;
    for (const auto& [x, c] : h_) r = std::max(r, std::abs(x));
    return r;
}

Hopping::Coeff Hopping::symbol(double p) const {
    Coeff s{};
    for (const auto& [x, c] : h_) s += c * std::polar(1.0, kTwoPi * p * x);
    return s;
}

double Hopping::lieb_robinson_speed() const {
    double v = 0.0;
    for (const auto& [x, c] : h_) v += std::abs(c) * std::abs(x);
    return 2.0 * v;
}

std::vector<std::complex<double>> symbol(const Hopping& h, int n) {
    if (n < 1 || n < 2 * h.support_diameter()) {
        throw std::invalid_argument("symbol: grid of " + std::to_string(n) + " points too small for hopping diameter " +
                                    std::to_string(h.support_diameter()));
    }
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        std::complex<double> s{};
        for (const auto& [x, c] : h.coefficients()) s += c * turn(static_cast<long>(m) * x, n);
        out[static_cast<std::size_t>(m)] = s;
    }
    return out;
}

OneParticleVector::OneParticleVector(int d, int grid) : d_(d), f_(Eigen::MatrixXcd::Zero(grid, d)) {
    if (d < 2) throw std::invalid_argument("OneParticleVector: d must be >= 2");
    if (grid < 1) throw std::invalid_argument("OneParticleVector: grid must be positive");
}

OneParticleVector OneParticleVector::delta(int d, int grid, int site, int charge) {
    OneParticleVector f(d, grid);
    f.set(site, charge, 1.0);
    return f;
}

std::complex<double> OneParticleVector::at(int site, int charge) const {
    if (charge < 0 || charge >= d_) throw std::out_of_range("OneParticleVector: charge out of range");
    return f_(floor_mod(site, grid()), charge);
}

void OneParticleVector::set(int site, int charge, std::complex<double> value) {
    if (charge < 0 || charge >= d_) throw std::out_of_range("OneParticleVector: charge out of range");
    f_(floor_mod(site, grid()), charge) = value;
}

int OneParticleVector::site_of_row(int row) const {
    const int n = grid();
    return row < (n + 1) / 2 ? row : row - n;
}

Eigen::MatrixXcd OneParticleVector::momentum() const {
    const int n = grid();
    Eigen::FFT<double> fft;
    Eigen::MatrixXcd out(n, d_);
    Eigen::VectorXcd col(n);
    for (int j = 0; j < d_; ++j) {
        Eigen::VectorXcd in = f_.col(j);
        fft.inv(col, in);
        out.col(j) = col * static_cast<double>(n);
    }
    return out;
}

OneParticleVector OneParticleVector::from_momentum(int d, const Eigen::MatrixXcd& momentum) {
    if (momentum.cols() != d) throw std::invalid_argument("from_momentum: column count must equal d");
    const int n = static_cast<int>(momentum.rows());
    OneParticleVector f(d, n);
    Eigen::FFT<double> fft;
    Eigen::VectorXcd col(n);
    for (int j = 0; j < d; ++j) {
        Eigen::VectorXcd in = momentum.col(j);
        fft.fwd(col, in);
        f.f_.col(j) = col / static_cast<double>(n);
    }
    return f;
}

double OneParticleVector::max_abs_difference(const OneParticleVector& other) const {
    if (other.d_ != d_ || other.grid() != grid()) throw std::invalid_argument("OneParticleVector: shape mismatch");
    return (f_ - other.f_).cwiseAbs().maxCoeff();
}

OneParticleVector evolve(const OneParticleVector& f, const Hopping& h, double t) {
    const int n = f.grid();
    const auto hhat = symbol(h, n);
    Eigen::MatrixXcd mom = f.momentum();
    for (int m = 0; m < n; ++m) {
        const std::complex<double> mult = std::exp(std::complex<double>(0.0, 1.0) * hhat[static_cast<std::size_t>(m)] * t);
        mom.row(m) *= mult;
    }
    return OneParticleVector::from_momentum(f.d(), mom);
}

OneParticleVector lattice_shift(const OneParticleVector& f, int n) {
    OneParticleVector out(f.d(), f.grid());
    for (int row = 0; row < f.grid(); ++row) {
        for (int j = 0; j < f.d(); ++j) out.set(row + n, j, f.position()(row, j));
    }
    return out;
}

SupDecay sup_decay(const OneParticleVector& f, const Hopping& h, const std::vector<double>& t_grid, double fit_start,
                   double fit_stop) {
    if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw std::invalid_argument("sup_decay: t grid must be increasing");
    SupDecay out;
    out.series.reserve(t_grid.size());
    for (double t : t_grid) out.series.emplace_back(t, evolve(f, h, t).sup_norm());

    const double lo = std::max(fit_start, 5.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [t, s] : out.series) {
        if (t < lo || t > fit_stop || s <= 0.0) continue;
        const double x = std::log(t);
        const double y = std::log(s);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("sup_decay: fewer than two points in the fit window");
    const double denom = n * sxx - sx * sx;
    out.exponent = (n * sxy - sx * sy) / denom;
    out.log_prefactor = (sy - out.exponent * sx) / n;
    out.fit_points = n;
    return out;
}

OneParticleVector fractional_shift(const OneParticleVector& f, double delta, int twist) {
    const double whole = std::floor(delta);
    const double frac = delta - whole;
    const int steps = static_cast<int>(whole);
    const int d = f.d();
    const int n = f.grid();
    const OneParticleVector moved = lattice_shift(f, steps);
    // The fractional part translates by frac (momentum multiplier e^{2 pi i frac p})
    // and rotates sector j by e^{2 pi i frac j/d}.
    Eigen::MatrixXcd mom = moved.momentum();
    for (int m = 0; m < n; ++m) mom.row(m) *= std::polar(1.0, kTwoPi * frac * m / n);
    for (int j = 0; j < d; ++j) {
        const std::complex<double> rot = std::polar(1.0, kTwoPi * frac * j / d);
        const std::complex<double> tw = turn(floor_mod(static_cast<long>(twist) * j * steps, d), d);
        mom.col(j) *= rot * tw;
    }
    if (frac == 0.0) {
        // Integer shifts stay exact in position space.
        OneParticleVector out(d, n);
        for (int row = 0; row < n; ++row) {
            for (int j = 0; j < d; ++j) {
                const std::complex<double> tw = turn(floor_mod(static_cast<long>(twist) * j * steps, d), d);
                out.set(moved.site_of_row(row), j, moved.position()(row, j) * tw);
            }
        }
        return out;
    }
    return OneParticleVector::from_momentum(d, mom);
}

OneParticleVector sector_translate(const OneParticleVector& f, int j, int k) {
    const int n = f.grid();
    const int d = f.d();
    if (n % d != 0) throw std::invalid_argument("sector_translate: grid size must be divisible by d");
    const long offset = floor_mod(static_cast<long>(j - k) * (n / d), n);
    const Eigen::MatrixXcd mom = f.momentum();
    Eigen::MatrixXcd out(n, d);
    for (int m = 0; m < n; ++m) out.row(m) = mom.row(floor_mod(m + offset, n));
    return OneParticleVector::from_momentum(d, out);
}

ConstraintReport sigma_constraint_check(const Hopping& h, int k) {
    if (k < 1) throw std::invalid_argument("sigma_constraint_check: k must be >= 1");
    ConstraintReport rep;
    rep.k = k;
    for (int l = 0; l < k; ++l) {
        const double p = static_cast<double>(l) / k;
        rep.points.push_back(p);
        std::complex<double> s{};
        for (const auto& [x, c] : h.coefficients()) s += c * turn(static_cast<long>(l) * x, k);
        rep.direct.push_back(s);
        rep.direct_sorted.push_back(s.real());
    }
    std::sort(rep.direct_sorted.begin(), rep.direct_sorted.end());

    // Sum over block offsets X of H_ab(X) = h(kX + a - b); every offset x
    // contributes to the entries with a - b = x mod k.
    Eigen::MatrixXcd blocked = Eigen::MatrixXcd::Zero(k, k);
    for (const auto& [x, c] : h.coefficients()) {
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                if (floor_mod(x - (a - b), k) == 0) blocked(a, b) += c;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blocked, Eigen::EigenvaluesOnly);
    for (int i = 0; i < k; ++i) rep.blocked_eigenvalues.push_back(es.eigenvalues()(i));

    for (int i = 0; i < k; ++i) {
        rep.deviation = std::max(rep.deviation, std::abs(rep.direct_sorted[static_cast<std::size_t>(i)] -
                                                         rep.blocked_eigenvalues[static_cast<std::size_t>(i)]));
    }
    rep.coincide = rep.deviation < 1e-12;
    return rep;
}

}  // namespace dgrading
