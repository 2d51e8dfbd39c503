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

#include "dgrading/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "dgrading/dressing.hpp"
#include "dgrading/dynamics.hpp"

namespace dgrading {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kNormTol = 1e-10;

std::string chain_params(const GradingParams& p, const ChainSpec& chain) {
    std::ostringstream os;
    os << "d=" << p.d << " j+=" << p.j_plus << " j-=" << p.j_minus << " L=" << chain.length();
    return os.str();
}

std::string with(const std::string& base, const std::string& extra) { return base + " " + extra; }

std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

WeylMonomial random_monomial(int d, const ChainSpec& chain, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> label(0, d - 1);
    std::uniform_int_distribution<int> phase(0, 2 * d - 1);
    SiteMap sites;
    for (int x = 0; x < chain.length(); ++x) {
        const SiteLabel l{label(rng), label(rng)};
        if (l.k != 0 || l.l != 0) sites[x] = l;
    }
    return WeylMonomial::from_canonical(d, std::move(sites), PhaseExp(d, phase(rng)));
}

void product_rule(const GradingParams& p, const ChainSpec& chain, std::uint64_t seed, std::vector<AuditRow>& rows) {
    const int d = p.d;
    const ChainSpec site(d, 1);
    double dev = 0.0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n) {
                    const auto a = WeylMonomial::single(d, 0, k, l);
                    const auto b = WeylMonomial::single(d, 0, m, n);
                    dev = std::max(dev, realize(a * b, site).max_abs_difference(realize(a, site) * realize(b, site)));
                }
    rows.push_back(exact_row("weyl_product_single_site", "d=" + std::to_string(d), dev < kExactTol, dev));

    std::mt19937_64 rng(seed);
    double rdev = 0.0;
    constexpr int kPairs = 24;
    for (int i = 0; i < kPairs; ++i) {
        const auto a = random_monomial(d, chain, rng);
        const auto b = random_monomial(d, chain, rng);
        rdev = std::max(rdev, realize(a * b, chain).max_abs_difference(realize(a, chain) * realize(b, chain)));
    }
    rows.push_back(exact_row("weyl_product_random", with(chain_params(p, chain), "pairs=" + std::to_string(kPairs)),
                             rdev < kExactTol, rdev));

    // Z X Z^{-1} = omega X.
    const auto z = WeylMonomial::single(d, 0, 1, 0);
    const auto x = WeylMonomial::single(d, 0, 0, 1);
    const auto lhs = z * x * mono_adjoint(z);
    const auto omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
    const double sdev = realize(AlgebraElement(lhs), site).max_abs_difference(omega * realize(x, site));
    const bool sym = lhs.sites() == x.sites() && lhs.phase().exponent() == floor_mod(x.phase().exponent() + 2, 2 * d);
    rows.push_back(exact_row("clock_shift_relation", "d=" + std::to_string(d), sym && sdev < kExactTol, sdev));
}

void string_defect(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const std::string base = chain_params(p, chain);
    double dense = 0.0;
    for (int x = 1; x < chain.length(); ++x) {
        const ShiftDefect sd = shift_covariance_defect(x, p, chain);
        dense = std::max(dense, sd.dense_deviation);
        const double dev = realize(sd.printed, chain).max_abs_difference(realize(sd.defect, chain));
        rows.push_back(printed_row("shift_defect_closed_form", with(base, "x=" + std::to_string(x)), sd.printed_match, dev,
                                   sd.defect.to_string()));
    }
    rows.push_back(exact_row("shift_defect_dense", base, dense < kExactTol, dense));
}

void dressed_products(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const std::string base = chain_params(p, chain);
    for (int x = 1; x < chain.length(); ++x) {
        const WeylMonomial actual = dressed_weyl(x, 1, p, chain) * dressed_weyl(0, 1, p, chain);
        const WeylMonomial printed = printed_dressed_product(x, 0, p, chain);
        const double dev = realize(actual, chain).max_abs_difference(realize(printed, chain));
        rows.push_back(printed_row("dressed_product_closed_form", with(base, "x=" + std::to_string(x) + " y=0"),
                                   dev < kExactTol, dev, actual.to_string()));
    }
}

void exchange_phases(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const std::string base = chain_params(p, chain);
    const int d = p.d;
    for (int x = 0; x < chain.length(); ++x) {
        for (int y = x + 1; y < chain.length(); ++y) {
            const auto a = dressed_weyl(x, 1, p, chain);
            const auto b = dressed_weyl(y, 1, p, chain);
            const int c = commutation_phase(a, b);
            const auto ab = realize(a * b, chain);
            const auto ba = realize(b * a, chain);
            const double oracle = ab.max_abs_difference(std::polar(1.0, 2.0 * std::numbers::pi * c / d) * ba);
            const double printed = ab.max_abs_difference(std::polar(1.0, 2.0 * std::numbers::pi / d) * ba);
            const std::string prm = with(base, "x=" + std::to_string(x) + " y=" + std::to_string(y));
            const std::string payload = "exponent=" + std::to_string(c);
            if (oracle >= kExactTol) {
                rows.push_back({"dressed_exchange", prm, Status::Fail, oracle, payload});
            } else if (c == 1) {
                rows.push_back({"dressed_exchange", prm, Status::Exact, printed, payload});
            } else {
                rows.push_back({"dressed_exchange", prm, Status::Mismatch, printed, payload});
            }
        }
    }
}

void matrix_unit_exchange(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const std::string base = chain_params(p, chain);
    const int d = p.d;
    for (int x = 0; x < chain.length(); ++x) {
        for (int y = x + 1; y < chain.length() && y <= x + 2; ++y) {
            double worst_printed = 0.0;
            double worst_symbolic = 0.0;
            bool all_close = true;
            int mismatches = 0;
            std::ostringstream payload;
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l)
                        for (int n = 0; n < d; ++n) {
                            const ExchangeReport r = dressed_commutation_report(x, y, j, k, l, n, p, chain);
                            all_close = all_close && r.closes;
                            const auto sym = std::polar(1.0, 2.0 * std::numbers::pi * r.symbolic_exponent / d);
                            worst_symbolic = std::max(worst_symbolic, std::abs(sym - r.oracle_phase));
                            worst_printed = std::max(worst_printed, r.printed_deviation);
                            if (!r.printed_match && mismatches++ < 4) {
                                payload << "(" << j << k << l << n << "):" << fmt_complex(r.oracle_phase) << " ";
                            }
                        }
            const std::string prm = with(base, "x=" + std::to_string(x) + " y=" + std::to_string(y));
            rows.push_back(exact_row("unit_exchange_closure", prm, all_close && worst_symbolic < kExactTol, worst_symbolic));
            std::string text = payload.str();
            if (mismatches == 0) text = "all printed phases reproduced";
            else text = std::to_string(mismatches) + " label sets differ; " + text;
            while (!text.empty() && text.back() == ' ') text.pop_back();
            rows.push_back(printed_row("unit_exchange_closed_form", prm, mismatches == 0, worst_printed, text));
        }
    }
}

void norms(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const int d = p.d;
    std::vector<int> sites{0, chain.length() / 2, chain.length() - 1};
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    double dev = 0.0;
    for (int x : sites) {
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s)
                dev = std::max(dev, std::abs(op_norm(realize(dressed_matrix_unit(x, r, s, p, chain), chain)) - 1.0));
        dev = std::max(dev, std::abs(op_norm(realize(dressed_weyl(x, 1, 0, p, chain), chain)) - 1.0));
        dev = std::max(dev, std::abs(op_norm(realize(dressed_weyl(x, 1, p, chain), chain)) - 1.0));
    }
    rows.push_back(exact_row("unit_norms", chain_params(p, chain), dev < kNormTol, dev));
}

void sectors(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const int d = p.d;
    const auto groups = sector_indices(chain);
    std::int64_t rank = 0;
    for (const auto& g : groups) rank += static_cast<std::int64_t>(g.size());
    const auto charges = basis_charges(chain);
    double dev = 0.0;
    bool nonzero = true;
    for (int dressed = 0; dressed < 2; ++dressed) {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const AlgebraElement unit = dressed ? dressed_matrix_unit(0, j, k, p, chain) : matrix_unit(d, j, k, 0);
                const auto m = realize(unit, chain).matrix();
                for (int c = 0; c < d; ++c) {
                    const int target = static_cast<int>(floor_mod(c + j - k, d));
                    double leak = 0.0;
                    double kept = 0.0;
                    for (Eigen::Index col : groups[static_cast<std::size_t>(c)]) {
                        for (Eigen::Index row = 0; row < m.rows(); ++row) {
                            const double v = std::abs(m(row, col));
                            if (charges[static_cast<std::size_t>(row)] == target) kept = std::max(kept, v);
                            else leak = std::max(leak, v);
                        }
                    }
                    dev = std::max(dev, leak);
                    nonzero = nonzero && kept > 0.5;
                }
            }
    }
    const bool ranks_ok = rank == chain.dim();
    rows.push_back(exact_row("sector_mapping", chain_params(p, chain), ranks_ok && nonzero && dev < kExactTol, dev,
                             "rank_sum=" + std::to_string(rank)));
}

void connection(const GradingParams& p, const ChainSpec& chain, std::vector<AuditRow>& rows) {
    const std::string base = chain_params(p, chain);
    for (int x = 0; x < chain.length(); ++x) {
        for (int y = x + 1; y < chain.length() && y <= x + 3; ++y) {
            const BilinearConnection bc = bilinear_connection(x, y, p, chain);
            rows.push_back(printed_row("bilinear_connection",
                                       with(base, "x=" + std::to_string(x) + " y=" + std::to_string(y)),
                                       bc.deviation < kExactTol, bc.deviation, "correction=" + bc.correction.to_string()));
        }
    }
}

void model_rows(const GradingParams& p, const ChainSpec& chain, const Hopping& hopping, std::vector<AuditRow>& rows) {
    if (hopping.is_zero() || hopping.support_diameter() >= chain.length()) return;
    const QuadraticModel model(hopping, p, chain);
    const std::string base = chain_params(p, chain);

    const DenseOperator& h = model.dense_hamiltonian();
    const double gauge = (h * gauge_unitary(chain) - gauge_unitary(chain) * h).frobenius_norm();
    const double herm = h.max_abs_difference(h.adjoint());
    rows.push_back(exact_row("hamiltonian_gauge_invariant", base, gauge < kExactTol, gauge));
    rows.push_back(exact_row("hamiltonian_self_adjoint", base, herm < kExactTol, herm));

    const int len = chain.length();
    if (len >= 3) {
        const int origin = len / 2;
        const int x = (origin >= 2 && origin + 2 < len) ? 2 : 1;
        const int z = x == 2 ? 1 : 0;
        for (auto& r : printed_commutator_oracle(model, origin, x, z)) rows.push_back(std::move(r));
    }

    const int site = len / 2;
    for (double t : {0.0, 1.0}) {
        const SpinReconstruction rec = reconstruct_spin_evolution(model, site, t);
        const double dev = std::max(rec.deviation_product, rec.deviation_reversed);
        std::ostringstream prm;
        prm << base << " x=" << site << " t=" << t;
        rows.push_back(exact_row("spin_reconstruction", prm.str(), rec.prefactor_exponent == 1 && dev < kNormTol,
                                 dev, "prefactor_exponent=" + std::to_string(rec.prefactor_exponent)));
    }
}

}  // namespace

std::vector<AuditRow> verify_suite(const GradingParams& params, const ChainSpec& chain, const Hopping& hopping,
                                   std::uint64_t seed) {
    if (params.d != chain.d()) throw std::invalid_argument("verify_suite: grading and chain dimensions differ");
    std::vector<AuditRow> rows;
    product_rule(params, chain, seed, rows);
    if (chain.length() >= 2) {
        string_defect(params, chain, rows);
        dressed_products(params, chain, rows);
        exchange_phases(params, chain, rows);
        matrix_unit_exchange(params, chain, rows);
        connection(params, chain, rows);
    }
    norms(params, chain, rows);
    sectors(params, chain, rows);
    model_rows(params, chain, hopping, rows);
    return rows;
}

bool all_exact_rows_hold(const std::vector<AuditRow>& rows) {
    return std::none_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.status == Status::Fail; });
}

}  // namespace dgrading
