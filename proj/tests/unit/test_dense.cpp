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
#include "doctest.h"
#include "oracles.hpp"

using namespace dgrading;

namespace {

WeylMonomial random_mono(int d, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lab(0, d - 1);
    WeylMonomial m(d);
    for (int x = 0; x < len; ++x) m = m * WeylMonomial::single(d, x, lab(rng), lab(rng));
    return m;
}

AlgebraElement random_element(int d, int len, int terms, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    AlgebraElement a(d);
    for (int i = 0; i < terms; ++i) a.add_term(random_mono(d, len, rng), {g(rng), g(rng)});
    return a;
}

}  // namespace

TEST_CASE("realize matches the Kronecker oracle") {
    std::mt19937_64 rng(3);
    for (int d = 2; d <= 4; ++d) {
        const ChainSpec chain(d, 3);
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = random_mono(d, 3, rng);
            std::map<int, oracle::Matrix> ops;
            for (const auto& [x, lab] : m.sites()) ops[x] = oracle::weyl(d, lab.k, lab.l);
            const oracle::Matrix want = m.phase().value() * oracle::embed(d, 3, ops);
            CHECK(oracle::max_abs(realize(m, chain).matrix() - want) < 1e-12);
        }
    }
}

TEST_CASE("realize of the identity and the clock spectrum") {
    const ChainSpec chain(3, 3);
    CHECK(realize(AlgebraElement::identity(3), chain).max_abs_difference(DenseOperator::identity(chain)) == 0.0);
    const auto z = realize(WeylMonomial::single(3, 0, 1, 0), chain);
    // diagonal with each cube root of unity appearing 9 times
    std::map<int, int> counts;
    for (Eigen::Index i = 0; i < z.dim(); ++i) {
        const double ang = std::arg(z.matrix()(i, i));
        counts[static_cast<int>(std::lround(ang / (2 * std::numbers::pi / 3)) + 3) % 3]++;
    }
    CHECK(counts.size() == 3);
    for (const auto& [k, n] : counts) CHECK(n == 9);
}

TEST_CASE("clock_shift generators") {
    for (int d = 2; d <= 5; ++d) {
        const auto [dd, ss] = clock_shift(d);
        const auto omega = std::polar(1.0, 2 * std::numbers::pi / d);
        CHECK((dd * ss).max_abs_difference(omega * (ss * dd)) < 1e-14);
        DenseOperator pd = DenseOperator::identity(dd.chain());
        DenseOperator ps = pd;
        for (int i = 0; i < d; ++i) {
            pd = pd * dd;
            ps = ps * ss;
        }
        CHECK(pd.max_abs_difference(DenseOperator::identity(dd.chain())) < 1e-14);
        CHECK(ps.max_abs_difference(DenseOperator::identity(dd.chain())) < 1e-14);
    }
}

TEST_CASE("realize is a homomorphism on random elements") {
    std::mt19937_64 rng(17);
    const ChainSpec chain(3, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_element(3, 4, 3, rng);
        const auto b = random_element(3, 4, 3, rng);
        CHECK(realize(a * b, chain).max_abs_difference(realize(a, chain) * realize(b, chain)) < 1e-12);
        CHECK(realize(elem_commutator(a, b), chain).max_abs_difference(commutator(realize(a, chain), realize(b, chain))) <
              1e-12);
        CHECK(realize(elem_adjoint(a), chain).max_abs_difference(realize(a, chain).adjoint()) < 1e-12);
    }
}

TEST_CASE("decompose inverts realize") {
    std::mt19937_64 rng(23);
    const ChainSpec chain(3, 3);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = random_element(3, 3, 5, rng);
        CHECK(decompose(realize(a, chain)).max_abs_difference(a) < 1e-12);
    }
    const auto m = random_mono(3, 3, rng);
    CHECK(std::abs(hs_coefficient(m, realize(m, chain)) - 1.0) < 1e-12);
}

TEST_CASE("operator norm") {
    std::mt19937_64 rng(29);
    const ChainSpec small(2, 3);
    CHECK(std::abs(op_norm(DenseOperator::identity(small)) - 1.0) < 1e-12);
    const auto a = realize(random_element(2, 3, 4, rng), small);
    CHECK(std::abs(op_norm(a) - oracle::spectral_norm(a.matrix())) < 1e-10);
    CHECK(std::abs(op_norm(std::complex<double>(0, -2.5) * a) - 2.5 * op_norm(a)) < 1e-10);

    // Large operators: block route for definite charge, power iteration otherwise.
    const ChainSpec big(2, 9);
    const auto mono = realize(random_mono(2, 9, rng), big);
    CHECK(std::abs(op_norm(mono) - 1.0) < 1e-10);
    const auto mixed = realize(random_element(2, 9, 3, rng), big);
    CHECK(std::abs(op_norm(mixed) - oracle::spectral_norm(mixed.matrix())) < 1e-8);
    CHECK(std::abs(op_norm_power(mixed) - oracle::spectral_norm(mixed.matrix())) < 1e-8);
}

TEST_CASE("gauge unitary, projection and sectors") {
    const ChainSpec chain(3, 3);
    const auto g = gauge_unitary(chain);
    DenseOperator prod = realize(WeylMonomial(3), chain);
    for (int x = 0; x < 3; ++x) prod = prod * realize(WeylMonomial::single(3, x, 1, 0), chain);
    CHECK(g.max_abs_difference(prod) < 1e-14);

    std::mt19937_64 rng(31);
    const auto a = random_element(3, 3, 6, rng);
    const auto dense_proj = gauge_project(realize(a, chain));
    CHECK(dense_proj.max_abs_difference(realize(gauge_project(a), chain)) < 1e-12);
    CHECK(gauge_project(dense_proj).max_abs_difference(dense_proj) < 1e-12);

    const auto sectors = sector_decompose(chain);
    REQUIRE(sectors.size() == 3);
    DenseOperator sum(chain);
    double rank = 0.0;
    for (std::size_t i = 0; i < sectors.size(); ++i) {
        sum += sectors[i];
        rank += sectors[i].trace().real();
        CHECK((sectors[i] * sectors[i]).max_abs_difference(sectors[i]) < 1e-12);
        for (std::size_t j = i + 1; j < sectors.size(); ++j) CHECK(op_norm(sectors[i] * sectors[j]) < 1e-12);
    }
    CHECK(sum.max_abs_difference(DenseOperator::identity(chain)) < 1e-12);
    CHECK(std::lround(rank) == 27);

    const auto two = sector_decompose(ChainSpec(2, 2));
    CHECK(std::lround(two[0].trace().real()) == 2);
    CHECK(std::lround(two[1].trace().real()) == 2);
}

TEST_CASE("matrix units move sectors by their charge") {
    const ChainSpec chain(3, 3);
    const auto sectors = sector_decompose(chain);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const auto m = realize(matrix_unit(3, j, k, 1), chain);
            for (int c = 0; c < 3; ++c) {
                const auto& into = sectors[static_cast<std::size_t>(floor_mod(c + j - k, 3))];
                const auto moved = m * sectors[static_cast<std::size_t>(c)];
                CHECK((into * moved).max_abs_difference(moved) < 1e-12);
            }
        }
}

TEST_CASE("charge offsets") {
    const ChainSpec chain(3, 2);
    CHECK(charge_offset(realize(WeylMonomial::single(3, 0, 0, 2), chain)) == 2);
    CHECK(charge_offset(realize(WeylMonomial::single(3, 0, 1, 0), chain)) == 0);
    CHECK_FALSE(charge_offset(DenseOperator(chain)).has_value());
    const AlgebraElement mixed = AlgebraElement(WeylMonomial::single(3, 0, 0, 1)) + AlgebraElement(WeylMonomial(3));
    CHECK_FALSE(charge_offset(realize(mixed, chain)).has_value());
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(ChainSpec(2, 13), CapExceeded);
    CHECK_NOTHROW(ChainSpec(2, 13, 8192));
    try {
        ChainSpec(3, 8);
    } catch (const CapExceeded& e) {
        CHECK(e.dimension() == 6561);
        CHECK(e.cap() == kDefaultDenseCap);
    }
    CHECK_THROWS_AS(realize(WeylMonomial::single(2, 5, 1, 0), ChainSpec(2, 3)), std::out_of_range);
}

TEST_CASE("basis ordering puts site 0 slowest") {
    const ChainSpec chain(3, 2);
    CHECK(chain.digit(1, 1) == 1);
    CHECK(chain.digit(1, 0) == 0);
    CHECK(chain.digit(3, 0) == 1);
}
