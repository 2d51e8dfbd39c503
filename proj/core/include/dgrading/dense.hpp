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

#ifndef DGRADING_DENSE_HPP
#define DGRADING_DENSE_HPP

// Brute-force realization of the symbolic algebra on a finite chain.
//
// Basis ordering: |t_0, ..., t_{L-1}> has index sum_x t_x d^{L-1-x}, i.e.
// site 0 is the slowest-varying tensor index. Internal basis labels run over
// 0..d-1; a product state written 1-indexed elsewhere maps by t -> t-1.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dgrading/weyl.hpp"

namespace dgrading {

inline constexpr std::int64_t kDefaultDenseCap = 4096;

/// Thrown when a dense object would exceed the configured dimension cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::int64_t dimension, std::int64_t cap);
    std::int64_t dimension() const { return dimension_; }
    std::int64_t cap() const { return cap_; }

private:
    std::int64_t dimension_;
    std::int64_t cap_;
};

class ChainSpec {
public:
    ChainSpec(int d, int length, std::int64_t cap = kDefaultDenseCap);

    int d() const { return d_; }
    int length() const { return length_; }
    std::int64_t dim() const { return dim_; }
    std::int64_t cap() const { return cap_; }
    bool contains(int site) const { return site >= 0 && site < length_; }
    /// Basis digit of `site` in the basis index.
    int digit(std::int64_t index, int site) const;

    bool operator==(const ChainSpec& o) const { return d_ == o.d_ && length_ == o.length_; }

private:
    int d_;
    int length_;
    std::int64_t dim_;
    std::int64_t cap_;
};

class DenseOperator {
public:
    using Matrix = Eigen::MatrixXcd;

    explicit DenseOperator(const ChainSpec& chain);  // zero operator
    DenseOperator(const ChainSpec& chain, Matrix m);

    static DenseOperator identity(const ChainSpec& chain);

    const ChainSpec& chain() const { return chain_; }
    const Matrix& matrix() const { return m_; }
    std::int64_t dim() const { return chain_.dim(); }

    DenseOperator adjoint() const { return {chain_, m_.adjoint()}; }
    std::complex<double> trace() const { return m_.trace(); }
    /// Normalized trace tr(A)/dim.
    std::complex<double> normalized_trace() const;
    double frobenius_norm() const { return m_.norm(); }
    double max_abs_difference(const DenseOperator& other) const;

    DenseOperator& operator+=(const DenseOperator& o);
    DenseOperator& operator-=(const DenseOperator& o);
    DenseOperator& operator*=(std::complex<double> c);

private:
    ChainSpec chain_;
    Matrix m_;
};

DenseOperator operator+(DenseOperator a, const DenseOperator& b);
DenseOperator operator-(DenseOperator a, const DenseOperator& b);
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(std::complex<double> c, DenseOperator a);
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// Single-site (clock, shift) = (W(1,0), W(0,1)): a diagonal D and a cyclic
/// permutation S with D S = e^{2 pi i/d} S D.
std::pair<DenseOperator, DenseOperator> clock_shift(int d);

DenseOperator realize(const WeylMonomial& m, const ChainSpec& chain);
DenseOperator realize(const AlgebraElement& a, const ChainSpec& chain);

/// Largest singular value. Exact SVD below kExactNormDim, otherwise
/// deterministic power iteration on M^dagger M.
inline constexpr std::int64_t kExactNormDim = 512;
double op_norm(const DenseOperator& m);
double op_norm_power(const DenseOperator& m, int max_iterations = 5000, double tol = 1e-12);

/// Global gauge unitary G = prod_x W_x(1,0).
DenseOperator gauge_unitary(const ChainSpec& chain);
/// Charge sum_x t_x mod d of every basis state.
std::vector<int> basis_charges(const ChainSpec& chain);
/// Basis indices grouped by charge, ascending within each sector.
std::vector<std::vector<Eigen::Index>> sector_indices(const ChainSpec& chain);
/// The charge q with every nonzero entry mapping sector c to sector c + q, if
/// there is exactly one such q (nullopt for the zero operator or mixed charge).
std::optional<int> charge_offset(const DenseOperator& a);
/// (1/d) sum_j G^j A G^{-j}.
DenseOperator gauge_project(const DenseOperator& a);

/// Projectors onto the eigenspaces of G with eigenvalue e^{2 pi i c/d}, c = 0..d-1.
std::vector<DenseOperator> sector_decompose(const ChainSpec& chain);

/// Tr(M^dagger A)/dim, using the permutation structure of M.
std::complex<double> hs_coefficient(const WeylMonomial& m, const DenseOperator& a);
/// Expansion of a dense operator in the Weyl monomial basis (phase-free keys),
/// terms with |coefficient| <= tol dropped.
AlgebraElement decompose(const DenseOperator& a, double tol = 1e-12);

}  // namespace dgrading

#endif  // DGRADING_DENSE_HPP
