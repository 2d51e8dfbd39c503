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

#include "dgrading/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SparseCore>

namespace dgrading {

CapExceeded::CapExceeded(std::int64_t dimension, std::int64_t cap)
    : std::runtime_error("dense dimension " + std::to_string(dimension) + " exceeds cap " + std::to_string(cap)),
      dimension_(dimension),
      cap_(cap) {}

ChainSpec::ChainSpec(int d, int length, std::int64_t cap) : d_(d), length_(length), dim_(1), cap_(cap) {
    if (d < 2) throw std::invalid_argument("ChainSpec: d must be >= 2");
    if (length < 1) throw std::invalid_argument("ChainSpec: length must be >= 1");
    for (int x = 0; x < length; ++x) {
        if (dim_ > std::numeric_limits<std::int64_t>::max() / d) {
            throw CapExceeded(std::numeric_limits<std::int64_t>::max(), cap);
        }
        dim_ *= d;
    }
    if (dim_ > cap) throw CapExceeded(dim_, cap);
}

int ChainSpec::digit(std::int64_t index, int site) const {
    for (int x = length_ - 1; x > site; --x) index /= d_;
    return static_cast<int>(index % d_);
}

namespace {

void require_same_chain(const ChainSpec& a, const ChainSpec& b) {
    if (!(a == b)) throw std::invalid_argument("DenseOperator: chain mismatch");
}

// Place values d^{L-1-x}.
std::vector<std::int64_t> place_values(const ChainSpec& chain) {
    std::vector<std::int64_t> pw(static_cast<std::size_t>(chain.length()));
    std::int64_t p = 1;
    for (int x = chain.length() - 1; x >= 0; --x) {
        pw[static_cast<std::size_t>(x)] = p;
        p *= chain.d();
    }
    return pw;
}

void check_support(const WeylMonomial& m, const ChainSpec& chain) {
    if (m.dim() != chain.d()) {
        throw std::invalid_argument("realize: monomial dimension " + std::to_string(m.dim()) +
                                    " does not match chain dimension " + std::to_string(chain.d()));
    }
    for (const auto& [site, lab] : m.sites()) {
        if (!chain.contains(site)) {
            throw std::out_of_range("realize: site " + std::to_string(site) + " outside chain of length " +
                                    std::to_string(chain.length()));
        }
    }
}

// Calls f(row, col, phase_exponent mod 2d) for the nonzero entries of a monomial.
template <class F>
void for_each_entry(const WeylMonomial& m, const ChainSpec& chain, const std::vector<std::int64_t>& pw, F&& f) {
    const int d = chain.d();
    const long two_d = 2L * d;
    for (std::int64_t col = 0; col < chain.dim(); ++col) {
        std::int64_t row = col;
        long q = m.phase().exponent();
        for (const auto& [site, lab] : m.sites()) {
            const std::int64_t p = pw[static_cast<std::size_t>(site)];
            const int t = static_cast<int>((col / p) % d);
            const int u = (t + lab.l) % d;
            row += (u - t) * p;
            q += -static_cast<long>(lab.k) * lab.l + 2L * lab.k * u;
        }
        f(row, col, floor_mod(q, two_d));
    }
}

}  // namespace

DenseOperator::DenseOperator(const ChainSpec& chain)
    : chain_(chain), m_(Matrix::Zero(chain.dim(), chain.dim())) {}

DenseOperator::DenseOperator(const ChainSpec& chain, Matrix m) : chain_(chain), m_(std::move(m)) {
    if (m_.rows() != chain.dim() || m_.cols() != chain.dim()) {
        throw std::invalid_argument("DenseOperator: matrix shape does not match chain dimension");
    }
}

DenseOperator DenseOperator::identity(const ChainSpec& chain) {
    return {chain, Matrix::Identity(chain.dim(), chain.dim())};
}

std::complex<double> DenseOperator::normalized_trace() const {
    return m_.trace() / static_cast<double>(chain_.dim());
}

double DenseOperator::max_abs_difference(const DenseOperator& other) const {
    require_same_chain(chain_, other.chain_);
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
    require_same_chain(chain_, o.chain_);
    m_ += o.m_;
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
    require_same_chain(chain_, o.chain_);
    m_ -= o.m_;
    return *this;
}

DenseOperator& DenseOperator::operator*=(std::complex<double> c) {
    m_ *= c;
    return *this;
}

DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
DenseOperator operator*(std::complex<double> c, DenseOperator a) { return a *= c; }

namespace {

// Realized monomials and short sums of them are very sparse; multiplying
// through a sparse view avoids the cubic dense product.
bool mostly_zero(const DenseOperator::Matrix& m) {
    const Eigen::Index limit = m.size() / 16;
    Eigen::Index nnz = 0;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (m.data()[i] != 0.0 && ++nnz > limit) return false;
    }
    return true;
}

}  // namespace

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    require_same_chain(a.chain(), b.chain());
    if (a.dim() >= 64) {
        if (mostly_zero(b.matrix())) {
            const Eigen::SparseMatrix<std::complex<double>> sb = b.matrix().sparseView(0.0, 0.0);
            return {a.chain(), a.matrix() * sb};
        }
        if (mostly_zero(a.matrix())) {
            const Eigen::SparseMatrix<std::complex<double>> sa = a.matrix().sparseView(0.0, 0.0);
            return {a.chain(), sa * b.matrix()};
        }
    }
    if (a.dim() >= 256) {
        // Charge-definite factors only touch one sector block per column sector.
        const auto qa = charge_offset(a);
        const auto qb = qa ? charge_offset(b) : std::nullopt;
        if (qa && qb) {
            const auto sectors = sector_indices(a.chain());
            const int d = a.chain().d();
            DenseOperator::Matrix out = DenseOperator::Matrix::Zero(a.dim(), a.dim());
            for (int c = 0; c < d; ++c) {
                const auto& cols = sectors[static_cast<std::size_t>(c)];
                const auto& mid = sectors[static_cast<std::size_t>((c + *qb) % d)];
                const auto& rows = sectors[static_cast<std::size_t>((c + *qb + *qa) % d)];
                const DenseOperator::Matrix left = a.matrix()(rows, mid);
                const DenseOperator::Matrix right = b.matrix()(mid, cols);
                out(rows, cols) = left * right;
            }
            return {a.chain(), std::move(out)};
        }
    }
    return {a.chain(), a.matrix() * b.matrix()};
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) { return a * b - b * a; }

std::pair<DenseOperator, DenseOperator> clock_shift(int d) {
    const ChainSpec site(d, 1);
    return {realize(WeylMonomial::single(d, 0, 1, 0), site), realize(WeylMonomial::single(d, 0, 0, 1), site)};
}

DenseOperator realize(const WeylMonomial& m, const ChainSpec& chain) {
    check_support(m, chain);
    DenseOperator::Matrix out = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    const auto pw = place_values(chain);
    const int d = chain.d();
    for_each_entry(m, chain, pw, [&](std::int64_t r, std::int64_t c, long q) { out(r, c) = root_of_unity_2d(d, q); });
    return {chain, std::move(out)};
}

DenseOperator realize(const AlgebraElement& a, const ChainSpec& chain) {
    if (a.dim() != chain.d()) {
        throw std::invalid_argument("realize: element dimension does not match chain");
    }
    DenseOperator::Matrix out = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    const auto pw = place_values(chain);
    const int d = chain.d();
    for (const auto& [key, coeff] : a.terms()) {
        const WeylMonomial m = a.monomial(key);
        check_support(m, chain);
        for_each_entry(m, chain, pw,
                       [&](std::int64_t r, std::int64_t c, long q) { out(r, c) += coeff * root_of_unity_2d(d, q); });
    }
    return {chain, std::move(out)};
}

namespace {

double largest_singular_value(const DenseOperator::Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<DenseOperator::Matrix> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace

double op_norm(const DenseOperator& m) {
    if (m.dim() < kExactNormDim) return largest_singular_value(m.matrix());
    // A definite-charge operator is a direct sum of sector-to-sector blocks.
    if (const auto q = charge_offset(m)) {
        const auto sectors = sector_indices(m.chain());
        const int d = m.chain().d();
        double best = 0.0;
        for (int c = 0; c < d; ++c) {
            const auto& cols = sectors[static_cast<std::size_t>(c)];
            const auto& rows = sectors[static_cast<std::size_t>((c + *q) % d)];
            best = std::max(best, largest_singular_value(m.matrix()(rows, cols)));
        }
        return best;
    }
    if (m.matrix().isZero(0.0)) return 0.0;
    return op_norm_power(m);
}

double op_norm_power(const DenseOperator& m, int max_iterations, double tol) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        v(i) = {1.1 + std::cos(0.37 * x), std::sin(0.73 * x)};
    }
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        Eigen::VectorXcd w = m.matrix().adjoint() * (m.matrix() * v);
        const double next = v.dot(w).real();
        const double wn = w.norm();
        if (wn == 0.0) return 0.0;
        v = w / wn;
        if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(lambda, 0.0));
}

std::vector<int> basis_charges(const ChainSpec& chain) {
    std::vector<int> charges(static_cast<std::size_t>(chain.dim()));
    for (std::int64_t i = 0; i < chain.dim(); ++i) {
        std::int64_t n = i;
        int c = 0;
        for (int x = 0; x < chain.length(); ++x) {
            c += static_cast<int>(n % chain.d());
            n /= chain.d();
        }
        charges[static_cast<std::size_t>(i)] = c % chain.d();
    }
    return charges;
}

std::vector<std::vector<Eigen::Index>> sector_indices(const ChainSpec& chain) {
    const auto charges = basis_charges(chain);
    std::vector<std::vector<Eigen::Index>> out(static_cast<std::size_t>(chain.d()));
    for (std::size_t i = 0; i < charges.size(); ++i) {
        out[static_cast<std::size_t>(charges[i])].push_back(static_cast<Eigen::Index>(i));
    }
    return out;
}

std::optional<int> charge_offset(const DenseOperator& a) {
    const auto charges = basis_charges(a.chain());
    const int d = a.chain().d();
    std::optional<int> q;
    const auto& m = a.matrix();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) == 0.0) continue;
            const int off = static_cast<int>(floor_mod(charges[static_cast<std::size_t>(r)] - charges[static_cast<std::size_t>(c)], d));
            if (q && *q != off) return std::nullopt;
            q = off;
        }
    }
    return q;
}

DenseOperator gauge_unitary(const ChainSpec& chain) {
    const auto charges = basis_charges(chain);
    DenseOperator::Matrix g = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    for (std::int64_t i = 0; i < chain.dim(); ++i) {
        g(i, i) = root_of_unity_2d(chain.d(), 2L * charges[static_cast<std::size_t>(i)]);
    }
    return {chain, std::move(g)};
}

DenseOperator gauge_project(const DenseOperator& a) {
    const ChainSpec& chain = a.chain();
    const int d = chain.d();
    const auto charges = basis_charges(chain);
    DenseOperator::Matrix out = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    for (int j = 0; j < d; ++j) {
        // (G^j A G^{-j})_{rc} = w^{j (c_r - c_c)} A_{rc}
        for (std::int64_t c = 0; c < chain.dim(); ++c) {
            for (std::int64_t r = 0; r < chain.dim(); ++r) {
                const long q = 2L * j * (charges[static_cast<std::size_t>(r)] - charges[static_cast<std::size_t>(c)]);
                out(r, c) += root_of_unity_2d(d, q) * a.matrix()(r, c);
            }
        }
    }
    out /= static_cast<double>(d);
    return {chain, std::move(out)};
}

std::vector<DenseOperator> sector_decompose(const ChainSpec& chain) {
    const auto charges = basis_charges(chain);
    std::vector<DenseOperator> projectors;
    projectors.reserve(static_cast<std::size_t>(chain.d()));
    for (int c = 0; c < chain.d(); ++c) {
        DenseOperator::Matrix p = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
        for (std::int64_t i = 0; i < chain.dim(); ++i) {
            if (charges[static_cast<std::size_t>(i)] == c) p(i, i) = 1.0;
        }
        projectors.emplace_back(chain, std::move(p));
    }
    return projectors;
}

std::complex<double> hs_coefficient(const WeylMonomial& m, const DenseOperator& a) {
    const ChainSpec& chain = a.chain();
    check_support(m, chain);
    const auto pw = place_values(chain);
    std::complex<double> acc{};
    for_each_entry(m, chain, pw, [&](std::int64_t r, std::int64_t c, long q) {
        acc += std::conj(root_of_unity_2d(chain.d(), q)) * a.matrix()(r, c);
    });
    return acc / static_cast<double>(chain.dim());
}

AlgebraElement decompose(const DenseOperator& a, double tol) {
    const ChainSpec& chain = a.chain();
    const int d = chain.d();
    const int len = chain.length();
    const std::int64_t n = chain.dim();
    const auto pw = place_values(chain);
    AlgebraElement out(d);

    std::vector<int> lab(static_cast<std::size_t>(len));
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(n));
    std::vector<std::complex<double>> col(static_cast<std::size_t>(d));
    for (std::int64_t shift = 0; shift < n; ++shift) {
        // Shift pattern l_x from the digits of `shift`.
        for (int x = 0; x < len; ++x) lab[static_cast<std::size_t>(x)] = static_cast<int>((shift / pw[static_cast<std::size_t>(x)]) % d);
        for (std::int64_t c = 0; c < n; ++c) {
            std::int64_t r = 0;
            for (int x = 0; x < len; ++x) {
                const std::int64_t p = pw[static_cast<std::size_t>(x)];
                const int t = static_cast<int>((c / p) % d);
                r += ((t + lab[static_cast<std::size_t>(x)]) % d) * p;
            }
            buf[static_cast<std::size_t>(c)] = a.matrix()(r, c);
        }
        // Separable transform over the clock labels, one site at a time:
        // g(k) = sum_t prod_x e^{i pi (k_x l_x - 2 k_x u_x)/d} v(t), u_x = t_x + l_x mod d.
        for (int x = 0; x < len; ++x) {
            const std::int64_t p = pw[static_cast<std::size_t>(x)];
            const int l = lab[static_cast<std::size_t>(x)];
            for (std::int64_t base = 0; base < n; ++base) {
                if ((base / p) % d != 0) continue;
                for (int k = 0; k < d; ++k) {
                    std::complex<double> s{};
                    for (int t = 0; t < d; ++t) {
                        const long q = static_cast<long>(k) * l - 2L * k * ((t + l) % d);
                        s += root_of_unity_2d(d, q) * buf[static_cast<std::size_t>(base + t * p)];
                    }
                    col[static_cast<std::size_t>(k)] = s;
                }
                for (int k = 0; k < d; ++k) buf[static_cast<std::size_t>(base + k * p)] = col[static_cast<std::size_t>(k)];
            }
        }
        for (std::int64_t kidx = 0; kidx < n; ++kidx) {
            const std::complex<double> coeff = buf[static_cast<std::size_t>(kidx)] / static_cast<double>(n);
            if (std::abs(coeff) <= tol) continue;
            SiteMap key;
            for (int x = 0; x < len; ++x) {
                const int k = static_cast<int>((kidx / pw[static_cast<std::size_t>(x)]) % d);
                const int l = lab[static_cast<std::size_t>(x)];
                if (k != 0 || l != 0) key.emplace_hint(key.end(), x, SiteLabel{k, l});
            }
            out.add_term(WeylMonomial::from_canonical(d, std::move(key), PhaseExp::one(d)), coeff);
        }
    }
    return out;
}

}  // namespace dgrading
