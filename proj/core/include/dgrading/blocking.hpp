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

#ifndef DGRADING_BLOCKING_HPP
#define DGRADING_BLOCKING_HPP

// Regrouping k adjacent sites of dimension d into one site of dimension d^k.
//
// The blocked gauge group is generated by exp(2 pi i Q / (k d)), Q the total
// charge sum_x t_x, so it has order k d and its k-th power is the original
// global gauge unitary. Everything fixed by the blocked group is therefore
// fixed by the original one.

#include <cstddef>

#include "dgrading/dense.hpp"
#include "dgrading/weyl.hpp"

namespace dgrading {

struct BlockReport {
    int block_size = 1;
    ChainSpec blocked_chain;
    /// The same operator expanded in the d^k-dimensional Weyl basis.
    AlgebraElement blocked;
    /// max |realize(blocked) - realize(original)| entrywise.
    double realization_deviation = 0.0;
    /// Order of the blocked gauge group (k d).
    int gauge_order = 0;
    /// max over the spanning set of |P_A P_{A(k)} M - P_{A(k)} M|.
    double containment_deviation = 0.0;
    std::size_t spanning_set_size = 0;
    /// Spanning monomials that A keeps but A(k) does not.
    std::size_t strictly_coarser = 0;
};

/// diag(exp(2 pi i Q / (k d))).
DenseOperator blocked_gauge_unitary(const ChainSpec& chain, int k);
/// Average of conjugation by the blocked gauge unitary over its k d powers.
DenseOperator blocked_gauge_project(const DenseOperator& a, int k);

/// Throws std::invalid_argument unless the chain length is divisible by k.
BlockReport block_sites(const AlgebraElement& a, int k, const ChainSpec& chain);

}  // namespace dgrading

#endif  // DGRADING_BLOCKING_HPP
