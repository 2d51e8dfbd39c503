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

#ifndef DGRADING_DYNAMICS_HPP
#define DGRADING_DYNAMICS_HPP

// Heisenberg dynamics of the quadratic dressed Hamiltonian
//
//     H = sum_z sum_x h(x) Wbar_z(0,1) Wbar_{z+x}(0,-1)
//
// on an open chain. Hermiticity of h makes the sum self-adjoint on its own:
// the h(-x) terms are the adjoints of the h(x) terms. Evolution is
// tau_t(A) = e^{iHt} A e^{-iHt}, computed from a cached eigendecomposition.

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dgrading/audit.hpp"
#include "dgrading/dense.hpp"
#include "dgrading/dressing.hpp"
#include "dgrading/one_particle.hpp"
#include "dgrading/weyl.hpp"

namespace dgrading {

/// Eigen-decomposition of H restricted to one gauge sector.
struct EnergySector {
    std::vector<Eigen::Index> basis;  // chain basis indices of the sector
    Eigen::VectorXd energies;
    Eigen::MatrixXcd vectors;         // columns in the sector's local basis
};

class QuadraticModel {
public:
    /// Throws std::invalid_argument if the hopping does not fit the chain.
    QuadraticModel(Hopping hopping, GradingParams params, ChainSpec chain);

    const Hopping& hopping() const { return hopping_; }
    const GradingParams& params() const { return params_; }
    const ChainSpec& chain() const { return chain_; }
    const AlgebraElement& hamiltonian() const { return hamiltonian_; }
    const DenseOperator& dense_hamiltonian() const;

    /// H is block diagonal in the gauge sectors; each block is diagonalized
    /// once, on first use.
    const std::vector<EnergySector>& spectrum() const;

private:
    struct Cache;

    Hopping hopping_;
    GradingParams params_;
    ChainSpec chain_;
    AlgebraElement hamiltonian_;
    std::shared_ptr<Cache> cache_;
};

QuadraticModel build_hamiltonian(const Hopping& hopping, const GradingParams& params, const ChainSpec& chain);

/// An observable rotated into the energy basis once, then evaluated at many times.
class EvolvedObservable {
public:
    EvolvedObservable(const QuadraticModel& model, const DenseOperator& a);
    DenseOperator at(double t) const;

    /// Sector-to-sector blocks of A in the energy basis: rows in sector r, columns in c.
    struct Block {
        int r = 0;
        int c = 0;
        Eigen::MatrixXcd rotated;
    };
    const std::vector<Block>& blocks() const { return blocks_; }

private:
    const QuadraticModel* model_;
    DenseOperator initial_;
    std::vector<Block> blocks_;
};

DenseOperator heisenberg_evolve(const AlgebraElement& a, const QuadraticModel& model, double t);
DenseOperator heisenberg_evolve(const DenseOperator& a, const QuadraticModel& model, double t);

/// speed = 2 sum_x |h(x)| |x|.
struct LightConeGuard {
    double speed = 0.0;

    /// True when a support [lo, hi] spread by speed * t stays at least one site
    /// inside the chain.
    bool admits(int lo, int hi, double t, const ChainSpec& chain) const;
    /// Largest admissible t for the support (infinite for zero speed).
    double horizon(int lo, int hi, const ChainSpec& chain) const;
};

LightConeGuard light_cone(const QuadraticModel& model);

/// Time for the Lieb-Robinson front to cross the chain once: L / speed.
double pre_recurrence_time(const QuadraticModel& model);

struct DecaySeries {
    std::vector<std::pair<double, double>> series;  // (t, ||[tau_t A, B]||)
    bool a_gauge_invariant = false;
    bool b_gauge_invariant = false;
};

DecaySeries commutator_decay(const AlgebraElement& a, const AlgebraElement& b, const QuadraticModel& model,
                             const std::vector<double>& t_grid);

/// Running maximum of the series over the remainder of the window [t, t_max].
std::vector<double> tail_envelope(const std::vector<std::pair<double, double>>& series, double t_max);

/// Wbar(f) = sum_{x in chain, j} f(x,j) Wbar_x(j,1).
AlgebraElement smeared_operator(const OneParticleVector& f, const GradingParams& params, const ChainSpec& chain);
/// Hilbert-Schmidt coefficients of a dense operator on the Wbar_x(j,1), as a
/// one-particle vector on `grid` sites.
OneParticleVector smeared_coefficients(const DenseOperator& a, const GradingParams& params, int grid);

/// Exact one-particle generator for d = 2, one hopping per charge sector.
/// The dressed shifts are then self-adjoint. For exchange exponent 1 the
/// charge-0 sector moves with h_eff(x) = 2 (h(-x) - h(x)) and the charge-1
/// sector is frozen; for exponent 0 everything is frozen. No closed form is
/// claimed for d > 2 (nullopt).
std::optional<std::vector<Hopping>> quasifree_generator(const QuadraticModel& model);

/// Evolves each charge column with its own hopping.
OneParticleVector evolve_sectors(const OneParticleVector& f, const std::vector<Hopping>& generators, double t);

struct SpanResidual {
    double relative_residual = 0.0;
    double derivative_norm = 0.0;
    OneParticleVector coefficients;
};

/// Projects i[H, Wbar(f)] onto span{Wbar_x(j,1)}.
SpanResidual span_residual(const QuadraticModel& model, const OneParticleVector& f);

/// Oracle decomposition of the printed single-commutator and time-derivative
/// identities around `origin` (hopping offset x, intermediate site z).
std::vector<AuditRow> printed_commutator_oracle(const QuadraticModel& model, int origin, int x, int z);

struct SpinReconstruction {
    /// Symbolic prefactor exponent c in W_x(1,0) = e^{2 pi i c/d} Wbar_x(0,1) [W_x(1,0) Wbar_x(0,-1)].
    int prefactor_exponent = 0;
    double deviation_product = 0.0;
    double deviation_reversed = 0.0;
};

/// tau_t W_x(1,0) against e^{2 pi i/d} tau_t(Wbar_x(0,1)) tau_t(W_x(1,0) Wbar_x(0,-1)),
/// and against the reversed factorization tau_t(W_x(1,0) Wbar_x(0,-1)) tau_t(Wbar_x(0,1)).
SpinReconstruction reconstruct_spin_evolution(const QuadraticModel& model, int x, double t);
std::vector<SpinReconstruction> reconstruct_spin_evolution(const QuadraticModel& model, int x,
                                                           const std::vector<double>& t_grid);

}  // namespace dgrading

#endif  // DGRADING_DYNAMICS_HPP
