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

#include "dgrading/blocking.hpp"
#include "dgrading/dense.hpp"
#include "doctest.h"

using namespace dgrading;

TEST_CASE("k = 1 blocking is the identity") {
    const ChainSpec chain(3, 3);
    const AlgebraElement a = AlgebraElement(WeylMonomial::single(3, 0, 1, 2)) + AlgebraElement(WeylMonomial::single(3, 2, 0, 1));
    const BlockReport rep = block_sites(a, 1, chain);
    CHECK(rep.blocked_chain == chain);
    CHECK(rep.blocked.max_abs_difference(a) < 1e-14);
    CHECK(rep.realization_deviation < 1e-14);
    CHECK(rep.strictly_coarser == 0);
}

TEST_CASE("qubit pairs blocked into four-level sites") {
    const ChainSpec chain(2, 4);
    const AlgebraElement a = AlgebraElement(WeylMonomial::single(2, 0, 0, 1) * WeylMonomial::single(2, 3, 1, 1)) +
                             std::complex<double>(0, 0.5) * AlgebraElement(WeylMonomial::single(2, 1, 1, 0));
    const BlockReport rep = block_sites(a, 2, chain);
    CHECK(rep.blocked_chain.d() == 4);
    CHECK(rep.blocked_chain.length() == 2);
    CHECK(rep.realization_deviation <= 1e-15);
    CHECK(rep.gauge_order == 4);
    CHECK(rep.containment_deviation < 1e-12);
    CHECK(rep.spanning_set_size == 256);
    CHECK(rep.strictly_coarser > 0);
}

TEST_CASE("blocked gauge generates the coarse gauge") {
    const ChainSpec chain(2, 4);
    const auto g = blocked_gauge_unitary(chain, 2);
    DenseOperator p = DenseOperator::identity(chain);
    for (int i = 0; i < 2; ++i) p = p * g;
    CHECK(p.max_abs_difference(gauge_unitary(chain)) < 1e-14);
    // fine-invariant operators are coarse-invariant
    const auto hop = realize(WeylMonomial::single(2, 0, 0, 1) * WeylMonomial::single(2, 2, 0, 1), chain);
    const auto fine = blocked_gauge_project(hop, 2);
    CHECK(gauge_project(fine).max_abs_difference(fine) < 1e-12);
}

TEST_CASE("blocking requires k | L") { CHECK_THROWS_AS(block_sites(AlgebraElement::identity(2), 3, ChainSpec(2, 4)), std::invalid_argument); }
