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

#ifndef DGRADING_DRESSING_HPP
#define DGRADING_DRESSING_HPP

// String-dressed Weyl operators and matrix units on a finite chain.
//
// The dressed shift at site x is
//
//     Wbar_x(0,s) = W_x(0,s) * prod_{y>x} W_y(s j+, 0) * prod_{y<x} W_y(s j-, 0),
//
// with both strings truncated at the chain ends. More generally
// Wbar_x(r,s) = W_x(r,s) * string_x^s, which keeps the on-site phase of the
// undressed label so that dressed matrix units use the same Fourier weights
// as undressed ones. Two dressed operators at x < y exchange with the phase
// e^{2 pi i (j+ - j-) s s' / d}; the strings only matter through differences,
// so truncation does not change any exchange relation.

#include <complex>
#include <string>
#include <vector>

#include "dgrading/dense.hpp"
#include "dgrading/weyl.hpp"

namespace dgrading {

/// Clock string carried by a charge-s operator at site x.
WeylMonomial dressing_string(int x, long s, const GradingParams& params, const ChainSpec& chain);

/// Wbar_x(0,s).
WeylMonomial dressed_weyl(int x, long s, const GradingParams& params, const ChainSpec& chain);
/// Wbar_x(r,s) = W_x(r,s) * string_x^s.
WeylMonomial dressed_weyl(int x, long r, long s, const GradingParams& params, const ChainSpec& chain);

/// Dressed |r><s| at x: acts as t_x = s -> r times a phase fixed by the other sites.
AlgebraElement dressed_matrix_unit(int x, int r, int s, const GradingParams& params, const ChainSpec& chain);

/// Dense check of mbar_x(j,k) mbar_y(l,n) = phase * mbar_y(l,n) mbar_x(j,k).
struct ExchangeReport {
    std::complex<double> oracle_phase;
    /// |AB - phase BA| / |BA| (Frobenius); ~0 when the exchange closes on a single phase.
    double closure_residual = 0.0;
    bool closes = false;
    /// Exact exponent c with phase e^{2 pi i c/d} from the symbolic algebra.
    int symbolic_exponent = 0;
    std::complex<double> printed_phase;
    double printed_deviation = 0.0;
    bool printed_match = false;
};

/// Compares the dense exchange phase with exp(i pi (j-k-l+n)(x-y)).
ExchangeReport dressed_commutation_report(int x, int y, int j, int k, int l, int n, const GradingParams& params,
                                          const ChainSpec& chain);

/// The local monomial implementing (string anchored at x)(string anchored at 0)^{-1},
/// together with comparisons against the printed defect and the boundary
/// terms left over by the naive shift of the dressed operator.
struct ShiftDefect {
    WeylMonomial defect;
    WeylMonomial printed;
    bool printed_match = false;
    /// max |realize(defect) - dense string ratio|.
    double dense_deviation = 0.0;
    /// dressed_weyl(x,1) * adjoint(shift(dressed_weyl(0,1), x)); only boundary
    /// factors survive on a finite chain (may reach past the chain end).
    WeylMonomial boundary_terms;
};

ShiftDefect shift_covariance_defect(int x, const GradingParams& params, const ChainSpec& chain);

struct BilinearConnection {
    WeylMonomial lhs;
    WeylMonomial rhs;
    double deviation = 0.0;
    /// lhs * rhs^{-1}; the scalar identity when the printed display holds.
    WeylMonomial correction;
};

/// Wbar_x(0,1) Wbar_y(0,-1) against
/// W_x(0,1) W_x(1,0)^{j+} prod_{x<z<y} W_z(1,0)^{j+ + j-} W_y(1,0)^{-j+} W_y(0,-1).
BilinearConnection bilinear_connection(int x, int y, const GradingParams& params, const ChainSpec& chain);

/// Printed right-hand side of the dressed product Wbar_x(0,1) Wbar_y(0,1):
/// W_x(0,1) W_x(1,0)^{j+} W_y(1,0)^{j-} W_y(0,1) prod_{0<z<x} W_z(1,0)^{j- + j+}
/// prod_{z>x} W_z(1,0)^{2 j-}; the undefined exponent "j_x" is read as j-.
WeylMonomial printed_dressed_product(int x, int y, const GradingParams& params, const ChainSpec& chain);

}  // namespace dgrading

#endif  // DGRADING_DRESSING_HPP
