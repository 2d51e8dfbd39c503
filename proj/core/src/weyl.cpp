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

#include "dgrading/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dgrading {

namespace {

void require_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("Weyl dimension must be >= 2");
    }
}

void require_same_dim(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("Weyl dimension mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

// Reduces a raw label to [0,d)^2 and returns the exponent (mod 2d) of the
// phase picked up: W(k,l) = e^{i pi (k'l' - kl)/d} W(k',l').
long reduce_label(int d, long k, long l, SiteLabel& out) {
    const long kr = floor_mod(k, d);
    const long lr = floor_mod(l, d);
    out = SiteLabel{static_cast<int>(kr), static_cast<int>(lr)};
    return floor_mod(kr * lr - floor_mod(k * l, 2L * d), 2L * d);
}

}  // namespace

WeylMonomial::WeylMonomial(int d) : d_(d), phase_(PhaseExp::one(d)) { require_dim(d); }

WeylMonomial WeylMonomial::single(int d, int site, long k, long l) {
    WeylMonomial m(d);
    SiteLabel lab;
    const long q = reduce_label(d, k, l, lab);
    m.phase_ = PhaseExp(d, q);
    if (lab != SiteLabel{}) {
        m.sites_.emplace(site, lab);
    }
    return m;
}

WeylMonomial WeylMonomial::from_canonical(int d, SiteMap sites, PhaseExp phase) {
    WeylMonomial m(d);
    require_same_dim(d, phase.dim());
    for (const auto& [site, lab] : sites) {
        if (lab.k < 0 || lab.k >= d || lab.l < 0 || lab.l >= d) {
            throw std::invalid_argument("WeylMonomial: label out of range at site " + std::to_string(site));
        }
        if (lab == SiteLabel{}) {
            throw std::invalid_argument("WeylMonomial: explicit identity label at site " + std::to_string(site));
        }
    }
    m.sites_ = std::move(sites);
    m.phase_ = phase;
    return m;
}

WeylMonomial WeylMonomial::with_phase(PhaseExp phase) const {
    require_same_dim(d_, phase.dim());
    WeylMonomial m = *this;
    m.phase_ = phase;
    return m;
}

SiteLabel WeylMonomial::label(int site) const {
    auto it = sites_.find(site);
    return it == sites_.end() ? SiteLabel{} : it->second;
}

int WeylMonomial::min_site() const {
    if (sites_.empty()) throw std::logic_error("scalar monomial has no support");
    return sites_.begin()->first;
}

int WeylMonomial::max_site() const {
    if (sites_.empty()) throw std::logic_error("scalar monomial has no support");
    return sites_.rbegin()->first;
}

int WeylMonomial::shift_charge() const {
    long c = 0;
    for (const auto& [site, lab] : sites_) c += lab.l;
    return static_cast<int>(floor_mod(c, d_));
}

int WeylMonomial::label_weight() const {
    long c = 0;
    for (const auto& [site, lab] : sites_) c += lab.k + lab.l;
    return static_cast<int>(floor_mod(c, d_));
}

std::string WeylMonomial::to_string() const {
    std::ostringstream os;
    os << "q=" << phase_.exponent();
    if (sites_.empty()) {
        os << " I";
    }
    for (const auto& [site, lab] : sites_) {
        os << " W" << site << "(" << lab.k << "," << lab.l << ")";
    }
    return os.str();
}

WeylMonomial mono_mul(const WeylMonomial& a, const WeylMonomial& b) {
    require_same_dim(a.dim(), b.dim());
    const int d = a.dim();
    long q = static_cast<long>(a.phase().exponent()) + b.phase().exponent();
    SiteMap out;
    auto ia = a.sites().begin();
    auto ib = b.sites().begin();
    const auto ea = a.sites().end();
    const auto eb = b.sites().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.emplace_hint(out.end(), *ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.emplace_hint(out.end(), *ib++);
        } else {
            const SiteLabel x = ia->second;
            const SiteLabel y = ib->second;
            q += static_cast<long>(x.k) * y.l - static_cast<long>(x.l) * y.k;
            SiteLabel lab;
            q += reduce_label(d, static_cast<long>(x.k) + y.k, static_cast<long>(x.l) + y.l, lab);
            if (lab != SiteLabel{}) out.emplace_hint(out.end(), ia->first, lab);
            ++ia;
            ++ib;
        }
    }
    return WeylMonomial::from_canonical(d, std::move(out), PhaseExp(d, q));
}

WeylMonomial mono_adjoint(const WeylMonomial& a) {
    const int d = a.dim();
    // W(k,l)^{-1} = W(-k,-l); the scalar phase inverts.
    long q = -static_cast<long>(a.phase().exponent());
    SiteMap out;
    for (const auto& [site, lab] : a.sites()) {
        SiteLabel r;
        q += reduce_label(d, -static_cast<long>(lab.k), -static_cast<long>(lab.l), r);
        out.emplace_hint(out.end(), site, r);
    }
    return WeylMonomial::from_canonical(d, std::move(out), PhaseExp(d, q));
}

int commutation_phase(const WeylMonomial& a, const WeylMonomial& b) {
    require_same_dim(a.dim(), b.dim());
    long c = 0;
    for (const auto& [site, x] : a.sites()) {
        auto it = b.sites().find(site);
        if (it == b.sites().end()) continue;
        const SiteLabel y = it->second;
        c += static_cast<long>(x.k) * y.l - static_cast<long>(x.l) * y.k;
    }
    return static_cast<int>(floor_mod(c, a.dim()));
}

WeylMonomial lattice_shift(const WeylMonomial& a, int n) {
    SiteMap out;
    for (const auto& [site, lab] : a.sites()) out.emplace_hint(out.end(), site + n, lab);
    return WeylMonomial::from_canonical(a.dim(), std::move(out), a.phase());
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(int d) : d_(d) { require_dim(d); }

AlgebraElement::AlgebraElement(const WeylMonomial& m, Coeff c) : d_(m.dim()) { add_term(m, c); }

void AlgebraElement::add_term(const WeylMonomial& m, Coeff c) {
    require_same_dim(d_, m.dim());
    const Coeff v = c * m.phase().value();
    if (v == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(m.sites(), v);
    if (!inserted) {
        it->second += v;
        if (it->second == Coeff{}) terms_.erase(it);
    }
}

AlgebraElement::Coeff AlgebraElement::coefficient(const SiteMap& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff{} : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    require_same_dim(d_, other.d_);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    require_same_dim(d_, other.d_);
    for (const auto& [key, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Coeff c) {
    if (c == Coeff{}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second == Coeff{}) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

AlgebraElement AlgebraElement::pruned(double tol) const {
    AlgebraElement out(d_);
    for (const auto& [key, c] : terms_) {
        if (std::abs(c) > tol) out.terms_.emplace_hint(out.terms_.end(), key, c);
    }
    return out;
}

double AlgebraElement::max_abs_difference(const AlgebraElement& other) const {
    require_same_dim(d_, other.d_);
    double dev = 0.0;
    for (const auto& [key, c] : terms_) dev = std::max(dev, std::abs(c - other.coefficient(key)));
    for (const auto& [key, c] : other.terms_) {
        if (!terms_.contains(key)) dev = std::max(dev, std::abs(c));
    }
    return dev;
}

std::string AlgebraElement::to_string(int max_terms) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os << std::setprecision(6);
    int n = 0;
    for (const auto& [key, c] : terms_) {
        if (n == max_terms) {
            os << " + ... (" << terms_.size() - static_cast<std::size_t>(n) << " more)";
            break;
        }
        if (n++ > 0) os << " + ";
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        if (key.empty()) os << "I";
        for (const auto& [site, lab] : key) os << "W" << site << "(" << lab.k << "," << lab.l << ")";
    }
    return os.str();
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(AlgebraElement::Coeff c, AlgebraElement a) { return a *= c; }
AlgebraElement operator*(AlgebraElement a, AlgebraElement::Coeff c) { return a *= c; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_dim(a.dim(), b.dim());
    AlgebraElement out(a.dim());
    for (const auto& [ka, ca] : a.terms()) {
        const WeylMonomial ma = a.monomial(ka);
        for (const auto& [kb, cb] : b.terms()) {
            out.add_term(mono_mul(ma, b.monomial(kb)), ca * cb);
        }
    }
    return out;
}

AlgebraElement elem_adjoint(const AlgebraElement& a) {
    AlgebraElement out(a.dim());
    for (const auto& [key, c] : a.terms()) out.add_term(mono_adjoint(a.monomial(key)), std::conj(c));
    return out;
}

AlgebraElement elem_commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement matrix_unit(int d, int r, int s, int site) {
    require_dim(d);
    if (r < 0 || r >= d || s < 0 || s >= d) {
        throw std::out_of_range("matrix_unit: index out of range");
    }
    const long l = floor_mod(r - s, d);
    AlgebraElement out(d);
    for (long k = 0; k < d; ++k) {
        // Coefficient (1/d) e^{i pi (k l - 2 k r)/d}, folded into the monomial phase.
        const WeylMonomial w = WeylMonomial::single(d, site, k, l);
        out.add_term(w.with_phase(w.phase() * PhaseExp(d, k * l - 2 * k * r)), 1.0 / d);
    }
    return out;
}

AlgebraElement gauge_rotate(const AlgebraElement& a, double alpha) {
    AlgebraElement out(a.dim());
    for (const auto& [key, c] : a.terms()) {
        const WeylMonomial m = a.monomial(key);
        out.add_term(m, c * std::polar(1.0, alpha * m.shift_charge()));
    }
    return out;
}

AlgebraElement lattice_shift(const AlgebraElement& a, int n) {
    AlgebraElement out(a.dim());
    for (const auto& [key, c] : a.terms()) out.add_term(lattice_shift(a.monomial(key), n), c);
    return out;
}

AlgebraElement gauge_project(const AlgebraElement& a) {
    AlgebraElement out(a.dim());
    for (const auto& [key, c] : a.terms()) {
        const WeylMonomial m = a.monomial(key);
        if (m.shift_charge() == 0) out.add_term(m, c);
    }
    return out;
}

bool is_gauge_invariant(const AlgebraElement& a) {
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [&](const auto& kv) { return a.monomial(kv.first).shift_charge() == 0; });
}

GradingParams::GradingParams(int d_, long jp, long jm)
    : d(d_), j_plus(static_cast<int>(floor_mod(jp, d_ > 0 ? d_ : 1))),
      j_minus(static_cast<int>(floor_mod(jm, d_ > 0 ? d_ : 1))) {
    require_dim(d_);
}

}  // namespace dgrading
