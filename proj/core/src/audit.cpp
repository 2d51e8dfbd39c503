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

#include "dgrading/audit.hpp"

namespace dgrading {

std::string to_string(Status s) {
    switch (s) {
        case Status::Exact: return "EXACT";
        case Status::Match: return "MATCH";
        case Status::Mismatch: return "MISMATCH";
        case Status::Fail: return "FAIL";
    }
    return "FAIL";
}

}  // namespace dgrading
