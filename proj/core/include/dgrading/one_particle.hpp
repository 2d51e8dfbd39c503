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

#ifndef DGRADING_ONE_PARTICLE_HPP
#define DGRADING_ONE_PARTICLE_HPP

// One-particle space l^2(Z) (x) C^d of smeared dressed operators
// Wbar(f) = sum_{x,j} f(x,j) Wbar_x(j,1).
//
// Vectors live on a periodic grid of N sites; the momentum form is
// fhat(m/N) = sum_x f(x) e^{2 pi i m x / N}. Quasifree evolution multiplies
// every charge component by e^{i hhat(p) t} with hhat(p) = sum_x h(x) e^{2 pi i p x},
// i.e. d/dt f = i (h * f) in position space.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dgrading {

inline constexpr int kDefaultGrid = 1024;

class Hopping {
public:
    using Coeff = std::complex<double>;

    Hopping() = default;
    /// Throws std::invalid_argument unless h(-x) = conj(h(x)) within tol.
    explicit Hopping(std::map<int, Coeff> coefficients, double tol = 1e-12);

    /// h(1) = a, h(-1) = conj(a).
    static Hopping nearest_neighbor(Coeff a);

    const std::map<int, Coeff>& coefficients() const { return h_; }
    Coeff at(int x) const;
    bool is_zero() const { return h_.empty(); }
    /// max x - min x over the support.
    int support_diameter() const;
    /// max |x| over the support.
    int range() const;
    Coeff symbol(double p) const;
    /// 2 sum_x |h(x)| |x|.
    double lieb_robinson_speed() const;

    bool operator==(const Hopping&) const = default;

private:
    std::map<int, Coeff> h_;
};

/// hhat sampled at p = m/N, m = 0..N-1. Requires N >= 2 * diameter.
std::vector<std::complex<double>> symbol(const Hopping& h, int n);

class OneParticleVector {
public:
    OneParticleVector(int d, int grid = kDefaultGrid);

    static OneParticleVector delta(int d, int grid, int site, int charge);
    static OneParticleVector from_momentum(int d, const Eigen::MatrixXcd& momentum);

    int d() const { return d_; }
    int grid() const { return static_cast<int>(f_.rows()); }

    std::complex<double> at(int site, int charge) const;
    void set(int site, int charge, std::complex<double> value);
    /// Centered site label in [-N/2, N/2) for a grid row.
    int site_of_row(int row) const;

    /// N x d, row = site mod N.
    const Eigen::MatrixXcd& position() const { return f_; }
    Eigen::MatrixXcd momentum() const;

    double l2_norm() const { return f_.norm(); }
    double sup_norm() const { return f_.cwiseAbs().maxCoeff(); }
    double max_abs_difference(const OneParticleVector& other) const;

private:
    int d_;
    Eigen::MatrixXcd f_;
};

OneParticleVector evolve(const OneParticleVector& f, const Hopping& h, double t);
/// Plain translation f(x,j) -> f(x-n,j).
OneParticleVector lattice_shift(const OneParticleVector& f, int n);

struct SupDecay {
    std::vector<std::pair<double, double>> series;  // (t, sup |f_t|)
    double exponent = 0.0;
    double log_prefactor = 0.0;
    int fit_points = 0;
};

/// Least-squares slope of log sup|f_t| against log t over
/// [max(fit_start, 5), fit_stop].
SupDecay sup_decay(const OneParticleVector& f, const Hopping& h, const std::vector<double>& t_grid,
                   double fit_start, double fit_stop);

/// U_delta: the integer part translates on the lattice; the fractional part
/// translates by interpolation (momentum multiplier e^{2 pi i (delta) p}) and
/// rotates charge sector j by e^{2 pi i (delta) j/d}; each whole step also
/// multiplies sector j by e^{2 pi i twist j/d}. With twist = 1 this is the
/// multiplier e^{2 pi i delta (p + j/d)}, a one-parameter group; twist = 0 is
/// the untwisted lattice convention.
OneParticleVector fractional_shift(const OneParticleVector& f, double delta, int twist);

/// fhat(p) -> fhat(p + (j-k)/d) on every charge component. Requires d | N.
OneParticleVector sector_translate(const OneParticleVector& f, int j, int k);

struct ConstraintReport {
    int k = 1;
    std::vector<double> points;                     // l/k
    std::vector<std::complex<double>> direct;       // hhat(l/k)
    std::vector<double> direct_sorted;              // Re hhat(l/k), ascending
    std::vector<double> blocked_eigenvalues;        // blocked symbol at P=0, ascending
    double deviation = 0.0;
    bool coincide = false;
};

/// Evaluates hhat at p = l/k directly and through the k-blocked hopping
/// matrix H_ab(X) = h(kX + a - b), whose symbol at zero block momentum has
/// eigenvalues hhat(l/k).
ConstraintReport sigma_constraint_check(const Hopping& h, int k);

}  // namespace dgrading

#endif  // DGRADING_ONE_PARTICLE_HPP
