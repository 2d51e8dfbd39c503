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

#include "dgrading/dressing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgrading {

namespace {

void require_site(int x, const ChainSpec& chain) {
    if (!chain.contains(x)) {
        throw std::out_of_range("site " + std::to_string(x) + " outside chain of length " +
                                std::to_string(chain.length()));
    }
}

void require_params(const GradingParams& params, const ChainSpec& chain) {
    if (params.d != chain.d()) throw std::invalid_argument("grading dimension does not match chain");
}

WeylMonomial clock_power(int d, int site, long power) { return WeylMonomial::single(d, site, power, 0); }

}  // namespace

WeylMonomial dressing_string(int x, long s, const GradingParams& params, const ChainSpec& chain) {
    require_params(params, chain);
    const int d = params.d;
    WeylMonomial out(d);
    for (int y = 0; y < chain.length(); ++y) {
        if (y < x) out = out * clock_power(d, y, s * params.j_minus);
        if (y > x) out = out * clock_power(d, y, s * params.j_plus);
    }
    return out;
}

WeylMonomial dressed_weyl(int x, long s, const GradingParams& params, const ChainSpec& chain) {
    return dressed_weyl(x, 0, s, params, chain);
}

WeylMonomial dressed_weyl(int x, long r, long s, const GradingParams& params, const ChainSpec& chain) {
    require_site(x, chain);
    return WeylMonomial::single(params.d, x, r, s) * dressing_string(x, s, params, chain);
}

AlgebraElement dressed_matrix_unit(int x, int r, int s, const GradingParams& params, const ChainSpec& chain) {
    require_site(x, chain);
    const AlgebraElement unit = matrix_unit(params.d, r, s, x);
    return unit * AlgebraElement(dressing_string(x, floor_mod(r - s, params.d), params, chain));
}

ExchangeReport dressed_commutation_report(int x, int y, int j, int k, int l, int n, const GradingParams& params,
                                          const ChainSpec& chain) {
    if (x == y) throw std::invalid_argument("dressed_commutation_report: sites must differ");
    const DenseOperator a = realize(dressed_matrix_unit(x, j, k, params, chain), chain);
    const DenseOperator b = realize(dressed_matrix_unit(y, l, n, params, chain), chain);
    const auto ab = (a * b).matrix();
    const auto ba = (b * a).matrix();

    ExchangeReport rep;
    const double nba = ba.squaredNorm();
    rep.oracle_phase = nba > 0 ? ba.conjugate().cwiseProduct(ab).sum() / nba : std::complex<double>{};
    rep.closure_residual = nba > 0 ? (ab - rep.oracle_phase * ba).norm() / std::sqrt(nba) : 0.0;
    rep.closes = nba > 0 && rep.closure_residual < 1e-10;

    rep.symbolic_exponent = commutation_phase(dressed_weyl(x, 0, j - k, params, chain),
                                              dressed_weyl(y, 0, l - n, params, chain));

    const double printed_angle = std::numbers::pi * static_cast<double>((j - k - l + n) * (x - y));
    rep.printed_phase = std::polar(1.0, printed_angle);
    rep.printed_deviation = std::abs(rep.printed_phase - rep.oracle_phase);
    rep.printed_match = rep.closes && rep.printed_deviation < 1e-10;
    return rep;
}

ShiftDefect shift_covariance_defect(int x, const GradingParams& params, const ChainSpec& chain) {
    if (x <= 0 || x >= chain.length()) throw std::out_of_range("shift_covariance_defect: need 0 < x < L");
    require_params(params, chain);
    const int d = params.d;

    const WeylMonomial defect = dressing_string(x, 1, params, chain) * mono_adjoint(dressing_string(0, 1, params, chain));

    WeylMonomial printed(d);
    for (int y = 1; y < x; ++y) printed = printed * clock_power(d, y, params.j_minus - params.j_plus);
    printed = printed * clock_power(d, 0, params.j_minus) * clock_power(d, x, params.j_plus);

    // Dense route: the strings are diagonal, with phase w^{sum_{y>a} j+ t_y + sum_{y<a} j- t_y}.
    const auto string_exponent = [&](std::int64_t idx, int anchor) {
        long e = 0;
        for (int y = 0; y < chain.length(); ++y) {
            const long t = chain.digit(idx, y);
            if (y > anchor) e += params.j_plus * t;
            if (y < anchor) e += params.j_minus * t;
        }
        return e;
    };
    DenseOperator::Matrix ratio = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    for (std::int64_t i = 0; i < chain.dim(); ++i) {
        ratio(i, i) = root_of_unity_2d(d, 2 * (string_exponent(i, x) - string_exponent(i, 0)));
    }

    ShiftDefect out{defect, printed, defect == printed, 0.0,
                    dressed_weyl(x, 1, params, chain) * mono_adjoint(lattice_shift(dressed_weyl(0, 1, params, chain), x))};
    out.dense_deviation = (realize(defect, chain).matrix() - ratio).cwiseAbs().maxCoeff();
    return out;
}

BilinearConnection bilinear_connection(int x, int y, const GradingParams& params, const ChainSpec& chain) {
    if (!(x < y)) throw std::invalid_argument("bilinear_connection: need x < y");
    require_site(x, chain);
    require_site(y, chain);
    const int d = params.d;
    const WeylMonomial lhs = dressed_weyl(x, 1, params, chain) * dressed_weyl(y, -1, params, chain);

    WeylMonomial rhs = WeylMonomial::single(d, x, 0, 1) * clock_power(d, x, params.j_plus);
    for (int z = x + 1; z < y; ++z) rhs = rhs * clock_power(d, z, params.j_plus + params.j_minus);
    rhs = rhs * clock_power(d, y, -static_cast<long>(params.j_plus)) * WeylMonomial::single(d, y, 0, -1);

    BilinearConnection out{lhs, rhs, 0.0, lhs * mono_adjoint(rhs)};
    out.deviation = realize(lhs, chain).max_abs_difference(realize(rhs, chain));
    return out;
}

WeylMonomial printed_dressed_product(int x, int y, const GradingParams& params, const ChainSpec& chain) {
    require_site(x, chain);
    require_site(y, chain);
    const int d = params.d;
    WeylMonomial out = WeylMonomial::single(d, x, 0, 1) * clock_power(d, x, params.j_plus) *
                       clock_power(d, y, params.j_minus) * WeylMonomial::single(d, y, 0, 1);
    for (int z = 1; z < x; ++z) out = out * clock_power(d, z, params.j_minus + params.j_plus);
    for (int z = x + 1; z < chain.length(); ++z) out = out * clock_power(d, z, 2L * params.j_minus);
    return out;
}

}  // namespace dgrading
