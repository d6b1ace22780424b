#include "framelet/verify.hpp"

#include <cmath>
#include <random>

namespace framelet {

std::string Provenance::str() const {
    switch (kind) {
        case ExplicitB1: return "explicit-b1";
        case ExplicitBj: return "explicit-b" + std::to_string(j);
        case FactorTerm: return "factor-term(" + std::to_string(j) + "," + std::to_string(t) + ")";
    }
    return "?";
}

LaurentMatrix LaurentMatrix::zero(int rows, int cols, int dim) {
    LaurentMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(rows, std::vector<Filter>(cols, Filter(dim)));
    return m;
}

LaurentMatrix polyphase_defect(const Filter& a, const Filter& ta,
                               const DilationContext& ctx) {
    int n = (int)ctx.det_abs;
    auto ap = coset_split(a, ctx);
    auto tap = coset_split(ta, ctx);
    LaurentMatrix m = LaurentMatrix::zero(n, n, ctx.dim);
    Rational inv_d(1, ctx.det_abs);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Filter entry = convolve(star(ap[r]), tap[c]).negated();
            if (r == c) entry = add(entry, delta(ctx.dim).scaled(inv_d));
            m.entries[r][c] = entry;
        }
    }
    return m;
}

namespace {

FilterDiagnostics diagnose(const Filter& b, const DilationContext& ctx) {
    FilterDiagnostics d;
    d.vmo = vanishing_moment_order(b);
    Filter zero_coset = coset_split(b, ctx)[0];
    d.interpolatory_highpass = true;
    for (const auto& [k, v] : zero_coset.coeffs()) {
        bool origin = std::all_of(k.begin(), k.end(), [](long x) { return x == 0; });
        if (!origin) d.interpolatory_highpass = false;
    }
    return d;
}

// sum of signed coset outer products of the high-pass filters, compared
// entry by entry against the defect matrix
template <typename GetPair>
BankReport check_identity(const DilationContext& ctx, const LaurentMatrix& defect,
                          size_t count, GetPair get) {
    BankReport report;
    int n = (int)ctx.det_abs;
    for (int r = 0; r < n && !report.first_failing_entry; ++r) {
        for (int c = 0; c < n; ++c) {
            Filter sum(ctx.dim);
            try {
                for (size_t l = 0; l < count; ++l) {
                    auto [bl_r, tbl_c, sign] = get(l, r, c);
                    Filter term = convolve(star(bl_r), tbl_c);
                    if (!term.is_zero() && term.radicand() != 1)
                        throw RadicandMismatch("outer product term is irrational");
                    if (sign < 0) term = term.negated();
                    sum = add(sum, term);
                }
            } catch (const RadicandMismatch& e) {
                report.first_failing_entry = {r, c};
                report.failure_reason = e.what();
                break;
            }
            if (!(sum == defect.entries[r][c])) {
                report.first_failing_entry = {r, c};
                report.failure_reason = "entry mismatch";
                break;
            }
        }
    }
    report.identity_holds = !report.first_failing_entry;
    return report;
}

}  // namespace

BankReport verify_dual_bank(const DualBank& bank) {
    const auto& ctx = bank.ctx;
    LaurentMatrix defect = polyphase_defect(bank.a, bank.ta, ctx);

    std::vector<std::vector<Filter>> b_parts, tb_parts;
    for (const auto& b : bank.bs) b_parts.push_back(coset_split(b, ctx));
    for (const auto& tb : bank.tbs) tb_parts.push_back(coset_split(tb, ctx));

    BankReport report = check_identity(
        ctx, defect, bank.bs.size(), [&](size_t l, int r, int c) {
            return std::tuple<const Filter&, const Filter&, int>(b_parts[l][r], tb_parts[l][c], 1);
        });
    report.s = (unsigned)bank.bs.size();

    unsigned min_vmo_b = kDefaultMomentCap, min_vmo_tb = kDefaultMomentCap;
    for (const auto& b : bank.bs) {
        report.bs.push_back(diagnose(b, ctx));
        min_vmo_b = std::min(min_vmo_b, report.bs.back().vmo.value);
    }
    for (const auto& tb : bank.tbs) {
        report.tbs.push_back(diagnose(tb, ctx));
        min_vmo_tb = std::min(min_vmo_tb, report.tbs.back().vmo.value);
    }
    Order sr_a = sum_rule_order(bank.a, ctx);
    Order sr_ta = sum_rule_order(bank.ta, ctx);
    report.vmo_sr_inequality = (sr_ta >= min_vmo_b) && (sr_a >= min_vmo_tb);
    // the zero of 1 - conj(a^) ta^ at the origin (equivalently the
    // linear-phase moments of star(a)*ta) caps the combined vanishing moments
    Order lpm_mix = vanishing_moment_order(mixing_filter(bank.a, bank.ta));
    report.vmo_lpm_inequality = lpm_mix >= (min_vmo_b + min_vmo_tb);
    return report;
}

BankReport verify_quasitight(const QuasiTightBank& bank) {
    const auto& ctx = bank.ctx;
    if (bank.eps.size() != bank.bs.size())
        throw std::invalid_argument("sign list length must match the high-pass list");
    LaurentMatrix defect = polyphase_defect(bank.a, bank.a, ctx);

    std::vector<std::vector<Filter>> b_parts;
    for (const auto& b : bank.bs) b_parts.push_back(coset_split(b, ctx));

    BankReport report = check_identity(
        ctx, defect, bank.bs.size(), [&](size_t l, int r, int c) {
            return std::tuple<const Filter&, const Filter&, int>(b_parts[l][r], b_parts[l][c],
                                                                 bank.eps[l]);
        });
    report.s = (unsigned)bank.bs.size();
    for (const auto& b : bank.bs) report.bs.push_back(diagnose(b, ctx));
    return report;
}

bool frequency_cross_check(const DualBank& bank, int num_samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    const auto& ctx = bank.ctx;
    for (int sample = 0; sample < num_samples; ++sample) {
        std::vector<double> xi(ctx.dim);
        for (auto& x : xi) x = dist(rng);
        for (size_t w = 0; w < ctx.omega.size(); ++w) {
            std::vector<double> shifted(ctx.dim);
            for (int i = 0; i < ctx.dim; ++i)
                shifted[i] = xi[i] + 2.0 * M_PI * to_double(ctx.omega[w][i]);
            std::complex<double> acc =
                std::conj(evaluate_at(bank.a, xi)) * evaluate_at(bank.ta, shifted);
            for (size_t l = 0; l < bank.bs.size(); ++l)
                acc += std::conj(evaluate_at(bank.bs[l], xi)) *
                       evaluate_at(bank.tbs[l], shifted);
            double expected = (w == 0) ? 1.0 : 0.0;
            if (std::abs(acc - std::complex<double>(expected)) > 1e-8) return false;
        }
    }
    return true;
}

}  // namespace framelet
