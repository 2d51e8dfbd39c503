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

#ifndef DGRADING_VERIFY_HPP
#define DGRADING_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "dgrading/audit.hpp"
#include "dgrading/dense.hpp"
#include "dgrading/one_particle.hpp"
#include "dgrading/weyl.hpp"

namespace dgrading {

/// Runs every relation family on one chain: product rule, string defects,
/// dressed products and exchange phases, matrix-unit exchange, norms, sector
/// mapping, the bilinear connection, and (when the hopping is nonzero) the
/// commutator and spin-reconstruction identities of the quadratic model.
/// `seed` only picks the random monomial pairs of the product-rule check.
std::vector<AuditRow> verify_suite(const GradingParams& params, const ChainSpec& chain, const Hopping& hopping,
                                   std::uint64_t seed);

/// True when no row is in the FAIL state.
bool all_exact_rows_hold(const std::vector<AuditRow>& rows);

}  // namespace dgrading

#endif  // DGRADING_VERIFY_HPP
