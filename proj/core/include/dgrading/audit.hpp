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

#ifndef DGRADING_AUDIT_HPP
#define DGRADING_AUDIT_HPP

#include <string>

namespace dgrading {

/// EXACT/FAIL: identities that must hold by construction.
/// MATCH/MISMATCH: a printed formula compared against the oracle.
enum class Status { Exact, Match, Mismatch, Fail };

std::string to_string(Status s);

struct AuditRow {
    std::string relation_id;
    std::string params;
    Status status = Status::Exact;
    double deviation = 0.0;
    std::string oracle_payload;
};

inline AuditRow exact_row(std::string id, std::string params, bool ok, double deviation, std::string payload = {}) {
    return {std::move(id), std::move(params), ok ? Status::Exact : Status::Fail, deviation, std::move(payload)};
}

inline AuditRow printed_row(std::string id, std::string params, bool match, double deviation, std::string payload) {
    return {std::move(id), std::move(params), match ? Status::Match : Status::Mismatch, deviation, std::move(payload)};
}

}  // namespace dgrading

#endif  // DGRADING_AUDIT_HPP
