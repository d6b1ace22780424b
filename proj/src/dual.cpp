#include "framelet/dual.hpp"

#include "framelet/linalg.hpp"
#include "framelet/moments.hpp"
#include "framelet/verify.hpp"

#include <algorithm>

namespace framelet {

Filter coset_defect(const Filter& a, const Filter& ta, int j, const DilationContext& ctx) {
    if (!is_interpolatory(a, ctx) || !is_interpolatory(ta, ctx))
        throw NotInterpolatory("coset defect requires interpolatory low-pass filters");
    if (j < 2 || j > (int)ctx.det_abs)
        throw std::out_of_range("coset index must lie in [2, d_M]");
    auto ap = coset_split(a, ctx);
    auto tap = coset_split(ta, ctx);
    Filter prod = convolve(star(ap[j - 1]), tap[j - 1]).scaled(Rational(ctx.det_abs));
    return sub(delta(ctx.dim).scaled(Rational(1, ctx.det_abs)), prod);
}

std::map<MultiIndex, Filter> difference_ideal_divide(const Filter& h, unsigned n) {
    if (!h.is_zero() && h.radicand() != 1)
        throw std::invalid_argument("difference ideal division needs a rational filter");
    int d = h.dim();
    auto alphas = multi_indices_of_degree(d, n);
    std::map<MultiIndex, Filter> result;
    if (h.is_zero()) {
        for (const auto& alpha : alphas) result.emplace(alpha, Filter(d));
        return result;
    }
    if (!(vanishing_moment_order(h, n) >= n))
        throw InsufficientVanishingMoments("filter lacks the vanishing moments for division");

    Box hbox = *h.support();
    std::vector<Filter> gens;
    for (const auto& alpha : alphas) gens.push_back(nabla_delta(alpha, d));

    for (int enlarge = 0; enlarge <= 3; ++enlarge) {
        // unknowns: coefficients of v_alpha on [lo, hi - alpha], padded by
        // `enlarge` rings when the tight box admits no solution
        struct Unknown {
            size_t alpha_idx;
            Index point;
        };
        std::vector<Unknown> unknowns;
        std::vector<std::vector<Index>> boxes(alphas.size());
        for (size_t ai = 0; ai < alphas.size(); ++ai) {
            Index lo(d), hi(d);
            bool empty = false;
            for (int i = 0; i < d; ++i) {
                lo[i] = hbox.lo[i] - enlarge;
                hi[i] = hbox.hi[i] - (long)alphas[ai][i] + enlarge;
                if (hi[i] < lo[i]) empty = true;
            }
            if (empty) continue;
            Index k = lo;
            while (true) {
                boxes[ai].push_back(k);
                unknowns.push_back({ai, k});
                int axis = d - 1;
                while (axis >= 0 && ++k[axis] > hi[axis]) k[axis--] = lo[axis];
                if (axis < 0) break;
            }
        }
        if (unknowns.empty()) continue;

        // equations: one per point reachable by any generator shift
        std::map<Index, size_t> equation_of_point;
        auto equation_index = [&](const Index& p) {
            auto [it, inserted] = equation_of_point.emplace(p, equation_of_point.size());
            return it->second;
        };
        std::vector<std::map<size_t, Rational>> sparse_rows_by_unknown(unknowns.size());
        for (size_t ui = 0; ui < unknowns.size(); ++ui) {
            const auto& gen = gens[unknowns[ui].alpha_idx];
            for (const auto& [gk, gc] : gen.coeffs()) {
                Index p(d);
                for (int i = 0; i < d; ++i) p[i] = gk[i] + unknowns[ui].point[i];
                sparse_rows_by_unknown[ui][equation_index(p)] += gc;
            }
        }
        for (const auto& [k, c] : h.coeffs()) equation_index(k);

        size_t n_eq = equation_of_point.size();
        RationalMatrix A(n_eq, std::vector<Rational>(unknowns.size(), 0));
        std::vector<Rational> rhs(n_eq, 0);
        for (size_t ui = 0; ui < unknowns.size(); ++ui)
            for (const auto& [eq, coef] : sparse_rows_by_unknown[ui]) A[eq][ui] = coef;
        for (const auto& [p, eq] : equation_of_point) rhs[eq] = h.at(p);

        auto sol = solve_linear(std::move(A), std::move(rhs));
        if (!sol) continue;

        for (const auto& alpha : alphas) result.emplace(alpha, Filter(d));
        for (size_t ui = 0; ui < unknowns.size(); ++ui)
            if ((*sol)[ui] != 0)
                result.at(alphas[unknowns[ui].alpha_idx]).set(unknowns[ui].point, (*sol)[ui]);

        // reconvolution check before returning
        Filter recon(d);
        for (size_t ai = 0; ai < alphas.size(); ++ai)
            recon = add(recon, convolve(gens[ai], result.at(alphas[ai])));
        if (!(recon == h)) throw std::logic_error("difference ideal division failed self-check");
        return result;
    }
    throw NoSolutionInBox("no solution within the support-box enlargement cap");
}

std::vector<std::pair<Filter, Filter>> split_vanishing_factors(
    const std::map<MultiIndex, Filter>& vs, unsigned n1, unsigned n2) {
    std::vector<std::pair<Filter, Filter>> out;
    // iterate alphas in graded-lex generation order, not map order
    if (vs.empty()) return out;
    int d = (int)vs.begin()->first.size();
    // terms sharing the same order-n1 left factor nabla^mu are pooled into a
    // single pair, so at most C(n1+d-1, d-1) pairs emerge per coset
    std::map<MultiIndex, Filter> pooled;
    std::vector<MultiIndex> mu_order;
    for (const auto& alpha : multi_indices_of_degree(d, n1 + n2)) {
        auto it = vs.find(alpha);
        if (it == vs.end()) continue;
        unsigned total = 0;
        for (auto x : alpha) total += x;
        if (total != n1 + n2) throw BadOrderSplit("|alpha| must equal n1 + n2");
        if (it->second.is_zero()) continue;
        // graded-lex-first mu with |mu| = n1 and mu <= alpha componentwise
        std::optional<MultiIndex> mu;
        for (const auto& cand : multi_indices_of_degree(d, n1)) {
            bool fits = true;
            for (int i = 0; i < d; ++i)
                if (cand[i] > alpha[i]) fits = false;
            if (fits) { mu = cand; break; }
        }
        MultiIndex nu(d);
        for (int i = 0; i < d; ++i) nu[i] = alpha[i] - (*mu)[i];
        Filter term = convolve(nabla_delta(nu, d), it->second);
        auto pit = pooled.find(*mu);
        if (pit == pooled.end()) {
            pooled.emplace(*mu, term);
            mu_order.push_back(*mu);
        } else {
            pit->second = add(pit->second, term);
        }
    }
    for (const auto& mu : mu_order) {
        const Filter& tu = pooled.at(mu);
        if (tu.is_zero()) continue;
        out.emplace_back(star(nabla_delta(mu, d)), tu);
    }
    return out;
}

namespace {

// b_k == lambda * b_i with lambda = ratio * sqrt(rad_k/rad_i); returns the
// rational ratio when the coefficient patterns are proportional
std::optional<Rational> proportional_ratio(const Filter& num, const Filter& den) {
    if (num.dim() != den.dim() || num.is_zero() || den.is_zero()) return std::nullopt;
    if (num.coeffs().size() != den.coeffs().size()) return std::nullopt;
    std::optional<Rational> ratio;
    auto it_n = num.coeffs().begin();
    auto it_d = den.coeffs().begin();
    for (; it_d != den.coeffs().end(); ++it_n, ++it_d) {
        if (it_n->first != it_d->first) return std::nullopt;
        Rational r = it_n->second / it_d->second;
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return std::nullopt;
    }
    return ratio;
}

void merge_proportional_pairs(DualBank& bank) {
    for (size_t i = 0; i < bank.bs.size(); ++i) {
        for (size_t k = bank.bs.size(); k-- > i + 1;) {
            auto lam = proportional_ratio(bank.bs[k], bank.bs[i]);
            auto nv = proportional_ratio(bank.tbs[k], bank.tbs[i]);
            if (!lam || !nv) continue;
            // lambda*nu = lam*nv*sqrt(radk*tradk/(radi*tradi)); rational only
            // when the radicand product is a perfect square
            Integer prod = bank.bs[k].radicand() * bank.tbs[k].radicand() *
                           bank.bs[i].radicand() * bank.tbs[i].radicand();
            auto split = split_square(prod);
            if (split.squarefree != 1) continue;
            Rational lambda_nu = (*lam) * (*nv) * Rational(split.square_root) /
                                 Rational(bank.bs[i].radicand() * bank.tbs[i].radicand());
            Rational fold = 1 + lambda_nu;
            bank.bs.erase(bank.bs.begin() + k);
            bank.tbs.erase(bank.tbs.begin() + k);
            bank.provenance.erase(bank.provenance.begin() + k);
            if (fold == 0) {
                bank.bs.erase(bank.bs.begin() + i);
                bank.tbs.erase(bank.tbs.begin() + i);
                bank.provenance.erase(bank.provenance.begin() + i);
                --i;
                break;
            }
            bank.tbs[i] = bank.tbs[i].scaled(fold);
        }
    }
}

}  // namespace

DualBank build_dual_bank(const Filter& a, const Filter& ta, const DilationContext& ctx,
                         unsigned n1, unsigned n2, bool merge_proportional) {
    if (!is_interpolatory(a, ctx) || !is_interpolatory(ta, ctx))
        throw NotInterpolatory("both low-pass filters must be M-interpolatory");
    if (a.coeff_sum() != 1 || ta.coeff_sum() != 1)
        throw NotInterpolatory("low-pass filters must satisfy a^(0) = 1");
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("n1 and n2 must be positive");
    unsigned sr_min = std::min(sum_rule_order(a, ctx).value, sum_rule_order(ta, ctx).value);
    if (n1 + n2 > sr_min)
        throw OrderBudgetExceeded("n1 + n2 exceeds min{sr(a,M), sr(ta,M)} = " +
                                  std::to_string(sr_min));

    DualBank bank{ctx, a, ta, {}, {}, {}, n1, n2};
    int d = ctx.dim;
    long dm = ctx.det_abs;

    // sign convention chosen so the explicit second pair is a positive
    // radical multiple of the first: b1 = delta - a, tb1 = ta - delta
    bank.bs.push_back(sub(delta(d), a));
    bank.tbs.push_back(sub(ta, delta(d)));
    bank.provenance.push_back({Provenance::ExplicitB1, 1, 0});

    auto ap = coset_split(a, ctx);
    auto tap = coset_split(ta, ctx);
    for (int j = 2; j <= dm; ++j) {
        const Index& g = ctx.gamma[j - 1];
        Filter b_rat = sub(delta(d).scaled(Rational(1, dm)), upsample_shift(ap[j - 1], g, ctx));
        Filter tb_rat = sub(delta(d).scaled(Rational(1, dm)), upsample_shift(tap[j - 1], g, ctx));
        bank.bs.push_back(b_rat.radical_scaled(1, dm));
        bank.tbs.push_back(tb_rat.radical_scaled(1, dm));
        bank.provenance.push_back({Provenance::ExplicitBj, j, 0});
    }

    for (int j = 2; j <= dm; ++j) {
        Filter hj = coset_defect(a, ta, j, ctx);
        auto vs = difference_ideal_divide(hj, n1 + n2);
        auto pairs = split_vanishing_factors(vs, n1, n2);
        const Index& g = ctx.gamma[j - 1];
        int t = 0;
        for (const auto& [u, tu] : pairs) {
            bank.bs.push_back(upsample_shift(u, g, ctx));
            bank.tbs.push_back(upsample_shift(tu, g, ctx));
            bank.provenance.push_back({Provenance::FactorTerm, j, ++t});
        }
    }

    if (merge_proportional) merge_proportional_pairs(bank);

    BankReport report = verify_dual_bank(bank);
    if (!report.identity_holds)
        throw std::logic_error("constructed bank failed the exact polyphase identity");
    return bank;
}

}  // namespace framelet
