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

#include "dgrading/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgrading {

PhaseExp::PhaseExp(int d, long q) : d_(d), q_(static_cast<int>(floor_mod(q, 2L * d))) {
    if (d < 2) {
        throw std::invalid_argument("PhaseExp: dimension must be >= 2");
    }
}

PhaseExp PhaseExp::operator*(const PhaseExp& other) const {
    if (other.d_ != d_) {
        throw std::invalid_argument("PhaseExp: dimension mismatch");
    }
    return PhaseExp(d_, static_cast<long>(q_) + other.q_);
}

PhaseExp& PhaseExp::operator*=(const PhaseExp& other) {
    *this = *this * other;
    return *this;
}

std::complex<double> PhaseExp::value() const { return root_of_unity_2d(d_, q_); }

std::string PhaseExp::to_string() const {
    return "e^{i*pi*" + std::to_string(q_) + "/" + std::to_string(d_) + "}";
}

std::complex<double> root_of_unity_2d(int d, long q) {
    const long n = 2L * d;
    const long r = floor_mod(q, n);
    // Multiples of pi/2 are returned exactly.
    if ((4 * r) % n == 0) {
        switch ((4 * r) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace dgrading
