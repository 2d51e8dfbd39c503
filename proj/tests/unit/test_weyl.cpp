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

#include <random>

#include "dgrading/dense.hpp"
#include "dgrading/phase.hpp"
#include "dgrading/weyl.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dgrading;

namespace {

WeylMonomial random_mono(int d, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lab(0, d - 1);
    WeylMonomial m(d);
    for (int x = 0; x < len; ++x) m = m * WeylMonomial::single(d, x, lab(rng), lab(rng));
    return m.with_phase(PhaseExp(d, std::uniform_int_distribution<int>(0, 2 * d - 1)(rng)));
}

oracle::Matrix oracle_of(const WeylMonomial& m, int len) {
    std::map<int, oracle::Matrix> ops;
    for (const auto& [x, lab] : m.sites()) ops[x] = oracle::weyl(m.dim(), lab.k, lab.l);
    return m.phase().value() * oracle::embed(m.dim(), len, ops);
}

}  // namespace

TEST_CASE("phase exponents live in Z_2d") {
    const PhaseExp p(3, 7);
    CHECK(p.exponent() == 1);
    CHECK((p * p.inverse()).exponent() == 0);
    CHECK(PhaseExp(4, -1).exponent() == 7);
    CHECK(std::abs(PhaseExp(2, 1).value() - std::complex<double>(0, 1)) < 1e-15);
    CHECK(root_of_unity_2d(2, 2) == std::complex<double>(-1, 0));
    CHECK(floor_mod(-7, 3) == 2);
}

TEST_CASE("single-site product rule agrees with matrix generators") {
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int m = 0; m < d; ++m)
                    for (int n = 0; n < d; ++n) {
                        const auto prod = WeylMonomial::single(d, 0, k, l) * WeylMonomial::single(d, 0, m, n);
                        const oracle::Matrix want = oracle::weyl(d, k, l) * oracle::weyl(d, m, n);
                        CHECK(oracle::max_abs(oracle_of(prod, 1) - want) < 1e-12);
                    }
    }
}

TEST_CASE("labels reduce mod d with the bilinear phase") {
    // W(d,1) = tau^{-d} Z^d X = -X.
    const auto w = WeylMonomial::single(2, 0, 2, 1);
    CHECK(w.label(0) == SiteLabel{0, 1});
    CHECK(w.phase().exponent() == 2);
    CHECK(WeylMonomial::single(3, 0, 3, 0).is_scalar());
    CHECK(WeylMonomial::single(3, 0, -1, 0).label(0) == SiteLabel{2, 0});
}

TEST_CASE("clock and shift commutation phase") {
    for (int d = 2; d <= 5; ++d) {
        const auto z = WeylMonomial::single(d, 0, 1, 0);
        const auto x = WeylMonomial::single(d, 0, 0, 1);
        CHECK(commutation_phase(z, x) == 1);
        CHECK(commutation_phase(x, z) == d - 1);
        // Z X Z^{-1} = omega X
        const auto conj = z * x * mono_adjoint(z);
        CHECK(conj.sites() == x.sites());
        CHECK(conj.phase().exponent() == 2);
    }
}

TEST_CASE("random monomial products match the Kronecker oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 3;
        const auto a = random_mono(d, 3, rng);
        const auto b = random_mono(d, 3, rng);
        CHECK(oracle::max_abs(oracle_of(a * b, 3) - oracle_of(a, 3) * oracle_of(b, 3)) < 1e-12);
        CHECK(oracle::max_abs(oracle_of(mono_adjoint(a), 3) - oracle_of(a, 3).adjoint()) < 1e-12);
        // a b = omega^c b a
        const int c = commutation_phase(a, b);
        const auto lhs = a * b;
        const auto rhs = b * a;
        CHECK(lhs.sites() == rhs.sites());
        CHECK(floor_mod(lhs.phase().exponent() - rhs.phase().exponent() - 2 * c, 2 * d) == 0);
    }
}

TEST_CASE("multiplication is associative and the identity is neutral") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_mono(3, 4, rng);
        const auto b = random_mono(3, 4, rng);
        const auto c = random_mono(3, 4, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * WeylMonomial(3) == a);
        CHECK((a * mono_adjoint(a)).is_scalar());
        CHECK((a * mono_adjoint(a)).phase().exponent() == 0);
    }
}

TEST_CASE("charges and supports") {
    const auto m = WeylMonomial::single(3, 1, 2, 1) * WeylMonomial::single(3, 4, 0, 1);
    CHECK(m.shift_charge() == 2);
    CHECK(m.label_weight() == (2 + 1 + 0 + 1) % 3);
    CHECK(m.min_site() == 1);
    CHECK(m.max_site() == 4);
    CHECK(lattice_shift(m, 2).min_site() == 3);
}

TEST_CASE("matrix units reproduce |r><s|") {
    for (int d = 2; d <= 4; ++d) {
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                const AlgebraElement u = matrix_unit(d, r, s, 0);
                oracle::Matrix got = oracle::Matrix::Zero(d, d);
                for (const auto& [key, c] : u.terms()) got += c * oracle_of(u.monomial(key), 1);
                oracle::Matrix want = oracle::Matrix::Zero(d, d);
                want(r, s) = 1.0;
                CHECK(oracle::max_abs(got - want) < 1e-12);
            }
    }
    // d = 2: m(0,1) = W(0,1)/2 + i W(1,1)/2
    const AlgebraElement u = matrix_unit(2, 0, 1, 0);
    CHECK(std::abs(u.coefficient(SiteMap{{0, {0, 1}}}) - 0.5) < 1e-15);
    CHECK(std::abs(u.coefficient(SiteMap{{0, {1, 1}}}) - std::complex<double>(0, 0.5)) < 1e-15);
}

TEST_CASE("matrix unit algebra at one site") {
    const int d = 3;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    const auto prod = (matrix_unit(d, a, b, 2) * matrix_unit(d, c, e, 2)).pruned(1e-13);
                    const auto want = b == c ? matrix_unit(d, a, e, 2) : AlgebraElement(d);
                    CHECK(prod.max_abs_difference(want) < 1e-12);
                }
}

TEST_CASE("algebra element arithmetic") {
    const int d = 3;
    const AlgebraElement x(WeylMonomial::single(d, 0, 0, 1));
    const AlgebraElement z(WeylMonomial::single(d, 0, 1, 0));
    const auto comm = elem_commutator(z, x);
    // [Z, X] = (omega - 1) X Z
    const auto want = (std::polar(1.0, 2 * std::numbers::pi / 3) - 1.0) * (x * z);
    CHECK(comm.max_abs_difference(want) < 1e-14);
    CHECK((x - x).is_zero());
    CHECK((x + x).coefficient(SiteMap{{0, {0, 1}}}) == std::complex<double>(2.0, 0.0));
    CHECK(elem_adjoint(elem_adjoint(z + 2.0 * x)).max_abs_difference(z + 2.0 * x) < 1e-15);
    CHECK(elem_scale(x, 0.0).pruned(0.0).is_zero());
}

TEST_CASE("gauge projection keeps charge-zero monomials") {
    const int d = 3;
    const AlgebraElement clock(WeylMonomial::single(d, 2, 1, 0));
    const AlgebraElement up(WeylMonomial::single(d, 2, 0, 1));
    const AlgebraElement hop(WeylMonomial::single(d, 1, 0, 1) * WeylMonomial::single(d, 3, 0, -1));
    CHECK(gauge_project(clock).max_abs_difference(clock) == 0.0);
    CHECK(gauge_project(up).is_zero());
    CHECK(gauge_project(hop).max_abs_difference(hop) == 0.0);
    CHECK(is_gauge_invariant(hop));
    CHECK_FALSE(is_gauge_invariant(up + clock));
    const auto mixed = up + clock + hop;
    CHECK(gauge_project(gauge_project(mixed)).max_abs_difference(gauge_project(mixed)) == 0.0);
}

TEST_CASE("gauge rotation multiplies by the charge phase") {
    const int d = 3;
    const WeylMonomial up = WeylMonomial::single(d, 0, 1, 1);
    const auto rotated = gauge_rotate(AlgebraElement(up), 0.3);
    CHECK(std::abs(rotated.coefficient(up.sites()) - up.phase().value() * std::polar(1.0, 0.3)) < 1e-15);
    const auto full = gauge_rotate(AlgebraElement(up), 2 * std::numbers::pi);
    CHECK(full.max_abs_difference(AlgebraElement(up)) < 1e-14);
}

TEST_CASE("grading parameters reduce mod d") {
    const GradingParams p(3, 4, -1);
    CHECK(p.j_plus == 1);
    CHECK(p.j_minus == 2);
    CHECK(p.exchange_exponent() == 2);
}
