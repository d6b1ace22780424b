#include "framelet/quasitight.hpp"

#include "framelet/moments.hpp"
#include "framelet/verify.hpp"

namespace framelet {

namespace {

// q == lambda * p for some rational lambda (both filters rational)
std::optional<Rational> rational_multiple(const Filter& q, const Filter& p) {
    if (q.is_zero() || p.is_zero()) return std::nullopt;
    if (q.coeffs().size() != p.coeffs().size()) return std::nullopt;
    std::optional<Rational> ratio;
    auto it_q = q.coeffs().begin();
    auto it_p = p.coeffs().begin();
    for (; it_p != p.coeffs().end(); ++it_q, ++it_p) {
        if (it_q->first != it_p->first) return std::nullopt;
        Rational r = it_q->second / it_p->second;
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return std::nullopt;
    }
    return ratio;
}

// sqrt(|r|) * f as an exact radical-coefficient filter
Filter sqrt_abs_scaled(const Filter& f, const Rational& r) {
    Rational ar = r < 0 ? -r : r;
    // sqrt(p/q) = sqrt(p*q)/q
    Integer num = boost::multiprecision::numerator(ar);
    Integer den = boost::multiprecision::denominator(ar);
    return f.radical_scaled(Rational(1, den), num * den);
}

}  // namespace

std::vector<std::pair<int, Filter>> hermitian_sos_decompose(const Filter& A, unsigned m) {
    if (!(star(A) == A)) throw NotHermitian("sum-of-squares input must be Hermitian");
    std::vector<std::pair<int, Filter>> out;
    if (A.is_zero()) return out;
    if (A.radicand() != 1)
        throw std::invalid_argument("sum-of-squares input must be rational");

    int d = A.dim();
    auto vs = difference_ideal_divide(A, 2 * m);
    for (const auto& alpha : multi_indices_of_degree(d, 2 * m)) {
        auto it = vs.find(alpha);
        if (it == vs.end() || it->second.is_zero()) continue;
        // graded-lex-first mu with |mu| = m, mu <= alpha componentwise
        std::optional<MultiIndex> mu;
        for (const auto& cand : multi_indices_of_degree(d, m)) {
            bool fits = true;
            for (int i = 0; i < d; ++i)
                if (cand[i] > alpha[i]) fits = false;
            if (fits) { mu = cand; break; }
        }
        MultiIndex nu(d);
        for (int i = 0; i < d; ++i) nu[i] = alpha[i] - (*mu)[i];
        Filter p = star(nabla_delta(*mu, d));
        // halving v_alpha makes star(p)*q + star(q)*p from the two signed
        // squares below reproduce A exactly (Hermitian symmetry pairs up
        // the alpha terms); without it the expansion doubles A
        Filter q = convolve(nabla_delta(nu, d), it->second.scaled(Rational(1, 2)));

        if (auto lambda = rational_multiple(q, p)) {
            // q = lambda p: the two squares collapse to 2*lambda*|p|^2
            if (*lambda != 0)
                out.emplace_back(*lambda < 0 ? -1 : 1,
                                 sqrt_abs_scaled(p, 2 * (*lambda)));
            continue;
        }
        out.emplace_back(1, sqrt_abs_scaled(add(p, q), Rational(1, 2)));
        out.emplace_back(-1, sqrt_abs_scaled(sub(p, q), Rational(1, 2)));
    }

    // exact re-expansion check
    Filter recon(d);
    for (const auto& [sign, u] : out) {
        Filter sq = convolve(star(u), u);
        recon = add(recon, sign < 0 ? sq.negated() : sq);
    }
    if (!(recon == A)) throw std::logic_error("sum-of-squares re-expansion failed self-check");
    return out;
}

QuasiTightBank build_quasitight(const Filter& a, const DilationContext& ctx, unsigned m) {
    if (!is_interpolatory(a, ctx) || a.coeff_sum() != 1)
        throw NotInterpolatory("low-pass filter must be M-interpolatory with a^(0) = 1");
    if (m < 1) throw std::invalid_argument("m must be positive");
    unsigned sr = sum_rule_order(a, ctx).value;
    if (2 * m > sr)
        throw OddSumRuleOrder("2m exceeds sr(a, M) = " + std::to_string(sr));

    QuasiTightBank bank{ctx, a, {}, {}, {}, m};
    int d = ctx.dim;
    long dm = ctx.det_abs;

    bank.bs.push_back(sub(delta(d), a));
    bank.eps.push_back(-1);
    bank.provenance.push_back({Provenance::ExplicitB1, 1, 0});

    auto ap = coset_split(a, ctx);
    for (int j = 2; j <= dm; ++j) {
        const Index& g = ctx.gamma[j - 1];
        Filter b_rat = sub(delta(d).scaled(Rational(1, dm)), upsample_shift(ap[j - 1], g, ctx));
        bank.bs.push_back(b_rat.radical_scaled(1, dm));
        bank.eps.push_back(1);
        bank.provenance.push_back({Provenance::ExplicitBj, j, 0});
    }

    for (int j = 2; j <= dm; ++j) {
        Filter hj = coset_defect(a, a, j, ctx);
        auto terms = hermitian_sos_decompose(hj, m);
        const Index& g = ctx.gamma[j - 1];
        int t = 0;
        for (const auto& [sign, u] : terms) {
            bank.bs.push_back(upsample_shift(u, g, ctx));
            bank.eps.push_back(sign);
            bank.provenance.push_back({Provenance::FactorTerm, j, ++t});
        }
    }

    BankReport report = verify_quasitight(bank);
    if (!report.identity_holds)
        throw std::logic_error("constructed bank failed the exact polyphase identity");
    return bank;
}

}  // namespace framelet
