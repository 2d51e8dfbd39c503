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

#include <algorithm>

#include "dgrading/verify.hpp"
#include "doctest.h"

using namespace dgrading;

namespace {

std::vector<AuditRow> rows_with_prefix(const std::vector<AuditRow>& rows, const std::string& prefix) {
    std::vector<AuditRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const AuditRow& r) { return r.relation_id.starts_with(prefix); });
    return out;
}

}  // namespace

TEST_CASE("verification suite on a qutrit Fermi-type chain") {
    const auto rows = verify_suite(GradingParams(3, 1, 0), ChainSpec(3, 5), Hopping::nearest_neighbor(0.5), 1);
    CHECK(all_exact_rows_hold(rows));
    for (const auto& r : rows) CHECK_MESSAGE(r.status != Status::Fail, r.relation_id << " " << r.params);
    const auto exchange = rows_with_prefix(rows, "dressed_exchange");
    REQUIRE_FALSE(exchange.empty());
    for (const auto& r : exchange) CHECK(r.status == Status::Exact);
    for (const std::string id : {"weyl_product_random", "sector_mapping", "hamiltonian_gauge_invariant",
                                 "hamiltonian_self_adjoint", "unit_norms"})
        CHECK_FALSE(rows_with_prefix(rows, id).empty());
}

TEST_CASE("equal exponents turn the exchange rows into mismatches") {
    const auto rows = verify_suite(GradingParams(2, 1, 1), ChainSpec(2, 4), Hopping::nearest_neighbor({0.0, 0.5}), 1);
    CHECK(all_exact_rows_hold(rows));
    const auto exchange = rows_with_prefix(rows, "dressed_exchange");
    REQUIRE_FALSE(exchange.empty());
    for (const auto& r : exchange) CHECK(r.status == Status::Mismatch);
}

TEST_CASE("suite is deterministic in the seed") {
    const auto a = verify_suite(GradingParams(3, 1, 0), ChainSpec(3, 4), Hopping::nearest_neighbor(0.5), 7);
    const auto b = verify_suite(GradingParams(3, 1, 0), ChainSpec(3, 4), Hopping::nearest_neighbor(0.5), 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].relation_id == b[i].relation_id);
        CHECK(a[i].deviation == b[i].deviation);
        CHECK(a[i].oracle_payload == b[i].oracle_payload);
    }
    std::vector<AuditRow> broken = a;
    broken.front().status = Status::Fail;
    CHECK_FALSE(all_exact_rows_hold(broken));
}
