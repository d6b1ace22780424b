#include "framelet/moments.hpp"

namespace framelet {

namespace {

Rational lattice_moment(const Filter& u, const MultiIndex& mu) {
    Rational s = 0;
    for (const auto& [k, c] : u.coeffs()) s += c * Rational(index_power(k, mu));
    return s;
}

}  // namespace

Order vanishing_moment_order(const Filter& u, unsigned cap) {
    if (u.is_zero()) return {cap, true};
    for (unsigned m = 0; m < cap; ++m) {
        for (const auto& mu : multi_indices_of_degree(u.dim(), m))
            if (lattice_moment(u, mu) != 0) return {m, false};
    }
    return {cap, true};
}

Order linear_phase_moment_order(const Filter& u, unsigned cap) {
    // the radical factor matters here: sum must equal exactly 1
    if (u.radicand() != 1 || u.coeff_sum() != 1) return {0, false};
    for (unsigned m = 1; m < cap; ++m) {
        for (const auto& mu : multi_indices_of_degree(u.dim(), m))
            if (lattice_moment(u, mu) != 0) return {m, false};
    }
    return {cap, true};
}

Order sum_rule_order(const Filter& a, const DilationContext& ctx, unsigned cap) {
    auto parts = coset_split(a, ctx);
    // re-express the coset moments on the original lattice points gamma + M k
    for (unsigned m = 0; m < cap; ++m) {
        for (const auto& mu : multi_indices_of_degree(ctx.dim, m)) {
            Rational reference = 0;
            for (size_t g = 0; g < parts.size(); ++g) {
                Rational s = 0;
                for (const auto& [k, c] : parts[g].coeffs()) {
                    Index point = ctx.apply(k);
                    for (int i = 0; i < ctx.dim; ++i) point[i] += ctx.gamma[g][i];
                    s += c * Rational(index_power(point, mu));
                }
                if (g == 0)
                    reference = s;
                else if (s != reference)
                    return {m, false};
            }
        }
    }
    return {cap, true};
}

Filter mixing_filter(const Filter& a, const Filter& ta) {
    if (a.dim() != ta.dim()) throw std::invalid_argument("dimension mismatch in mixing_filter");
    Filter prod = convolve(star(a), ta);
    if (!prod.is_zero() && prod.radicand() != 1)
        throw RadicandMismatch("star(a)*ta must be rational to form the mixing filter");
    return sub(delta(a.dim()), prod);
}

MomentReport moment_report(const Filter& u, const DilationContext& ctx, unsigned cap) {
    return {sum_rule_order(u, ctx, cap), vanishing_moment_order(u, cap),
            linear_phase_moment_order(u, cap), cap};
}

std::string order_to_string(const Order& o) {
    return o.at_least_cap ? ">=" + std::to_string(o.value) : std::to_string(o.value);
}

}  // namespace framelet
