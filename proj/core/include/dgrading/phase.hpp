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

#ifndef DGRADING_PHASE_HPP
#define DGRADING_PHASE_HPP

#include <complex>
#include <string>

namespace dgrading {

/// Non-negative remainder of a modulo m (m > 0).
constexpr long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

/// The scalar e^{i pi q / d}, stored as the exponent q in Z_{2d}.
///
/// All phases produced by products of Weyl monomials live in this group, so
/// the symbolic layer never touches floating point until `value()` is asked.
class PhaseExp {
public:
    PhaseExp() = default;
    PhaseExp(int d, long q);

    static PhaseExp one(int d) { return PhaseExp(d, 0); }

    int dim() const { return d_; }
    /// Canonical representative in [0, 2d).
    int exponent() const { return q_; }

    PhaseExp operator*(const PhaseExp& other) const;
    PhaseExp& operator*=(const PhaseExp& other);
    PhaseExp inverse() const { return PhaseExp(d_, -static_cast<long>(q_)); }

    std::complex<double> value() const;
    std::string to_string() const;

    bool operator==(const PhaseExp&) const = default;

private:
    int d_ = 2;
    int q_ = 0;
};

/// e^{i pi q / d} evaluated with exact quadrant values where they exist.
std::complex<double> root_of_unity_2d(int d, long q);

}  // namespace dgrading

#endif  // DGRADING_PHASE_HPP
