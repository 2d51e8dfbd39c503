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

#ifndef DGRADING_WEYL_HPP
#define DGRADING_WEYL_HPP

// Exact symbolic algebra of multi-site qudit Weyl operators.
//
// A single-site Weyl operator W(k,l) obeys
//
//     W(k,l) W(m,n) = e^{i pi (kn - lm)/d} W(k+m, l+n),    W(d,0) = 1.
//
// Concretely W(k,l) = e^{-i pi kl/d} Z^k X^l, with Z the clock
// (diagonal, Z|t> = w^t |t>, w = e^{2 pi i/d}) and X the cyclic shift
// (X|t> = |t+1 mod d>). Labels are stored reduced to [0,d); reducing a label
// that overflowed costs the phase e^{i pi (k'l' - kl)/d}, which is exactly
// what the bilinear rule together with W(d,0) = W(0,d) = 1 forces.

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "dgrading/phase.hpp"

namespace dgrading {

struct SiteLabel {
    int k = 0;  // clock exponent
    int l = 0;  // shift exponent

    auto operator<=>(const SiteLabel&) const = default;
};

/// Site -> label, with (0,0) never stored.
using SiteMap = std::map<int, SiteLabel>;

class WeylMonomial {
public:
    explicit WeylMonomial(int d);

    /// W_site(k,l) for arbitrary integer k, l (reduced with the overflow phase).
    static WeylMonomial single(int d, int site, long k, long l);
    /// Builds a monomial from already-canonical labels. Throws on (0,0) or
    /// out-of-range labels.
    static WeylMonomial from_canonical(int d, SiteMap sites, PhaseExp phase);

    int dim() const { return d_; }
    const SiteMap& sites() const { return sites_; }
    PhaseExp phase() const { return phase_; }
    WeylMonomial with_phase(PhaseExp phase) const;

    SiteLabel label(int site) const;
    bool is_scalar() const { return sites_.empty(); }
    int min_site() const;
    int max_site() const;

    /// Sum of shift labels mod d: the Z_d charge seen by the global gauge unitary.
    int shift_charge() const;
    /// Sum of all labels k + l mod d.
    int label_weight() const;

    std::string to_string() const;

    bool operator==(const WeylMonomial&) const = default;

private:
    int d_;
    SiteMap sites_;
    PhaseExp phase_;
};

WeylMonomial mono_mul(const WeylMonomial& a, const WeylMonomial& b);
inline WeylMonomial operator*(const WeylMonomial& a, const WeylMonomial& b) { return mono_mul(a, b); }
WeylMonomial mono_adjoint(const WeylMonomial& a);

/// c in [0,d) with a b = e^{2 pi i c/d} b a.
int commutation_phase(const WeylMonomial& a, const WeylMonomial& b);

WeylMonomial lattice_shift(const WeylMonomial& a, int n);

/// Finite complex combination of Weyl monomials, keyed by the phase-free labels.
class AlgebraElement {
public:
    using Coeff = std::complex<double>;
    using Terms = std::map<SiteMap, Coeff>;

    explicit AlgebraElement(int d);
    AlgebraElement(const WeylMonomial& m, Coeff c = 1.0);  // NOLINT: implicit by design of the algebra

    static AlgebraElement identity(int d) { return AlgebraElement(WeylMonomial(d)); }

    int dim() const { return d_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const WeylMonomial& m, Coeff c);
    /// Coefficient in front of the phase-free monomial with these labels.
    Coeff coefficient(const SiteMap& key) const;
    /// Phase-free monomial for a key.
    WeylMonomial monomial(const SiteMap& key) const { return WeylMonomial::from_canonical(d_, key, PhaseExp::one(d_)); }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(Coeff c);

    /// Drops terms with |coefficient| <= tol.
    AlgebraElement pruned(double tol) const;
    /// Largest coefficient deviation over the union of both term sets.
    double max_abs_difference(const AlgebraElement& other) const;

    std::string to_string(int max_terms = 16) const;

private:
    int d_;
    Terms terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(AlgebraElement::Coeff c, AlgebraElement a);
AlgebraElement operator*(AlgebraElement a, AlgebraElement::Coeff c);

inline AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
inline AlgebraElement elem_add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement elem_scale(const AlgebraElement& a, AlgebraElement::Coeff c) { return c * a; }
AlgebraElement elem_adjoint(const AlgebraElement& a);
AlgebraElement elem_commutator(const AlgebraElement& a, const AlgebraElement& b);

/// |r><s| at `site`, written as (1/d) sum_k w^{-kr} e^{i pi k l/d} W(k,l), l = r - s mod d.
AlgebraElement matrix_unit(int d, int r, int s, int site);

/// Multiplies each monomial by e^{i alpha c}, c its shift charge in [0,d).
AlgebraElement gauge_rotate(const AlgebraElement& a, double alpha);
AlgebraElement lattice_shift(const AlgebraElement& a, int n);
/// Keeps the charge-zero monomials (the gauge-invariant part).
AlgebraElement gauge_project(const AlgebraElement& a);
bool is_gauge_invariant(const AlgebraElement& a);

/// Dimension and string exponents of the grading automorphism.
struct GradingParams {
    int d = 2;
    int j_plus = 0;
    int j_minus = 0;

    GradingParams() = default;
    GradingParams(int d, long j_plus, long j_minus);

    /// e^{2 pi i c/d} is the exchange phase of dressed shift operators at x < y,
    /// with c = j_plus - j_minus mod d.
    int exchange_exponent() const { return static_cast<int>(floor_mod(j_plus - j_minus, d)); }

    bool operator==(const GradingParams&) const = default;
};

}  // namespace dgrading

#endif  // DGRADING_WEYL_HPP
