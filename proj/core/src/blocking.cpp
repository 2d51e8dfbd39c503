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

#include "dgrading/blocking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dgrading {

namespace {

std::vector<int> total_charges(const ChainSpec& chain) {
    std::vector<int> q(static_cast<std::size_t>(chain.dim()));
    for (std::int64_t i = 0; i < chain.dim(); ++i) {
        std::int64_t n = i;
        int c = 0;
        for (int x = 0; x < chain.length(); ++x) {
            c += static_cast<int>(n % chain.d());
            n /= chain.d();
        }
        q[static_cast<std::size_t>(i)] = c;
    }
    return q;
}

std::complex<double> root(long num, long order) {
    const long r = floor_mod(num, order);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(order));
}

void require_block(const ChainSpec& chain, int k) {
    if (k < 1) throw std::invalid_argument("block size must be >= 1");
    if (chain.length() % k != 0) {
        throw std::invalid_argument("chain length " + std::to_string(chain.length()) + " not divisible by block size " +
                                    std::to_string(k));
    }
}

}  // namespace

DenseOperator blocked_gauge_unitary(const ChainSpec& chain, int k) {
    require_block(chain, k);
    const auto q = total_charges(chain);
    const long order = static_cast<long>(k) * chain.d();
    DenseOperator::Matrix g = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    for (std::int64_t i = 0; i < chain.dim(); ++i) g(i, i) = root(q[static_cast<std::size_t>(i)], order);
    return {chain, std::move(g)};
}

DenseOperator blocked_gauge_project(const DenseOperator& a, int k) {
    const ChainSpec& chain = a.chain();
    require_block(chain, k);
    const auto q = total_charges(chain);
    const long order = static_cast<long>(k) * chain.d();
    DenseOperator::Matrix out = DenseOperator::Matrix::Zero(chain.dim(), chain.dim());
    for (std::int64_t c = 0; c < chain.dim(); ++c) {
        for (std::int64_t r = 0; r < chain.dim(); ++r) {
            const long delta = q[static_cast<std::size_t>(r)] - q[static_cast<std::size_t>(c)];
            std::complex<double> avg{};
            for (long m = 0; m < order; ++m) avg += root(m * delta, order);
            out(r, c) = avg / static_cast<double>(order) * a.matrix()(r, c);
        }
    }
    return {chain, std::move(out)};
}

BlockReport block_sites(const AlgebraElement& a, int k, const ChainSpec& chain) {
    require_block(chain, k);
    const int d = chain.d();
    int big = 1;
    for (int i = 0; i < k; ++i) big *= d;
    const ChainSpec blocked_chain(big, chain.length() / k, chain.cap());

    const DenseOperator original = realize(a, chain);
    // With site 0 slowest, grouping consecutive sites leaves the basis order
    // unchanged, so the identification is the identity on matrices.
    const DenseOperator reinterpreted(blocked_chain, original.matrix());
    AlgebraElement blocked = decompose(reinterpreted, 0.0);

    BlockReport report{k, blocked_chain, blocked, 0.0, k * d, 0.0, 0, 0};
    report.realization_deviation = (realize(blocked, blocked_chain).matrix() - original.matrix()).cwiseAbs().maxCoeff();

    // Spanning set: every monomial on the first min(L, 2k) sites.
    const int window = std::min(chain.length(), 2 * k);
    std::int64_t count = 1;
    for (int x = 0; x < window; ++x) count *= static_cast<std::int64_t>(d) * d;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t n = idx;
        WeylMonomial m(d);
        for (int x = 0; x < window; ++x) {
            const long kk = n % d;
            n /= d;
            const long ll = n % d;
            n /= d;
            m = m * WeylMonomial::single(d, x, kk, ll);
        }
        const DenseOperator dm = realize(m.with_phase(PhaseExp::one(d)), chain);
        const DenseOperator fine = blocked_gauge_project(dm, k);
        const DenseOperator coarse_of_fine = gauge_project(fine);
        report.containment_deviation = std::max(report.containment_deviation, coarse_of_fine.max_abs_difference(fine));
        if (gauge_project(dm).max_abs_difference(fine) > 1e-12) ++report.strictly_coarser;
        ++report.spanning_set_size;
    }
    return report;
}

}  // namespace dgrading
