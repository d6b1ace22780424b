#include "framelet/design.hpp"

#include "framelet/linalg.hpp"

#include <algorithm>
#include <set>

namespace framelet {

namespace {

std::vector<Index> box_points(const Box& box) {
    std::vector<Index> pts;
    int d = (int)box.lo.size();
    Index k = box.lo;
    while (true) {
        pts.push_back(k);
        int axis = d - 1;
        while (axis >= 0 && ++k[axis] > box.hi[axis]) k[axis--] = box.lo[axis];
        if (axis < 0) break;
    }
    return pts;
}

// E(k - c) + c; nullopt when the image is not a lattice point
std::optional<Index> symmetry_image(const Index& k, const IntMatrix& E,
                                    const RationalVector& c) {
    int d = (int)k.size();
    Index out(d);
    for (int r = 0; r < d; ++r) {
        Rational v = c[r];
        for (int col = 0; col < d; ++col) v += Rational(E[r][col]) * (Rational(k[col]) - c[col]);
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        out[r] = (long)boost::multiprecision::numerator(v).convert_to<long long>();
    }
    return out;
}

void verify_member(const Filter& a, const DilationContext& ctx,
                   const DesignConstraints& cs) {
    if (cs.normalization && a.coeff_sum() != 1)
        throw ConstraintViolation("coefficient sum is not 1");
    if (cs.interpolatory && !is_interpolatory(a, ctx))
        throw ConstraintViolation("filter is not interpolatory");
    if (cs.sr_order > 0 && !(sum_rule_order(a, ctx) >= cs.sr_order))
        throw ConstraintViolation("sum-rule order below the requested order");
    if (cs.symmetry) {
        const auto& t = *cs.symmetry;
        for (const auto& [k, v] : a.coeffs())
            for (const auto& E : t.group.elements) {
                auto img = symmetry_image(k, E, t.center);
                if (!img || a.at(*img) != Rational(t.sign) * v)
                    throw ConstraintViolation("symmetry orbit equality violated");
            }
    }
}

}  // namespace

AffineFilterFamily parametrize(const Box& box, const DilationContext& ctx,
                               const DesignConstraints& cs) {
    auto pts = box_points(box);
    if (pts.empty()) throw std::invalid_argument("empty support box");
    std::map<Index, size_t> col_of;
    for (size_t i = 0; i < pts.size(); ++i) col_of[pts[i]] = i;

    RationalMatrix A;
    std::vector<Rational> b;
    auto add_row = [&](std::vector<Rational> row, Rational rhs) {
        A.push_back(std::move(row));
        b.push_back(std::move(rhs));
    };

    if (cs.normalization) {
        std::vector<Rational> row(pts.size(), 1);
        add_row(std::move(row), 1);
    }

    if (cs.sr_order > 0) {
        // S_mu(gamma) = sum over the gamma-coset of a(k) k^mu, equal across cosets
        for (const auto& mu : multi_indices_below(ctx.dim, cs.sr_order)) {
            for (size_t j = 1; j < ctx.gamma.size(); ++j) {
                std::vector<Rational> row(pts.size(), 0);
                for (size_t i = 0; i < pts.size(); ++i) {
                    int ci = ctx.coset_index(pts[i]);
                    if (ci == (int)j)
                        row[i] += Rational(index_power(pts[i], mu));
                    else if (ci == 0)
                        row[i] -= Rational(index_power(pts[i], mu));
                }
                add_row(std::move(row), 0);
            }
        }
    }

    if (cs.interpolatory) {
        for (size_t i = 0; i < pts.size(); ++i) {
            if (ctx.coset_index(pts[i]) != 0) continue;
            bool origin = std::all_of(pts[i].begin(), pts[i].end(),
                                      [](long x) { return x == 0; });
            std::vector<Rational> row(pts.size(), 0);
            row[i] = 1;
            add_row(std::move(row), origin ? Rational(1, ctx.det_abs) : Rational(0));
        }
    }

    if (cs.symmetry) {
        const auto& t = *cs.symmetry;
        if (!is_compatible(ctx, t.group))
            throw NotCompatible("dilation is not compatible with the symmetry group");
        for (size_t i = 0; i < pts.size(); ++i) {
            for (const auto& E : t.group.elements) {
                auto img = symmetry_image(pts[i], E, t.center);
                std::vector<Rational> row(pts.size(), 0);
                if (img && col_of.count(*img)) {
                    if (*img == pts[i] && t.sign == 1) continue;
                    row[i] = 1;
                    row[col_of[*img]] -= Rational(t.sign);
                } else {
                    // orbit leaves the box: coefficient must vanish
                    row[i] = 1;
                }
                bool all_zero = std::all_of(row.begin(), row.end(),
                                            [](const Rational& r) { return r == 0; });
                if (!all_zero) add_row(std::move(row), 0);
            }
        }
    }

    auto sol = solve_affine(std::move(A), std::move(b));
    if (!sol) throw Infeasible("design constraints are inconsistent");

    AffineFilterFamily fam{Filter(ctx.dim), {}, ctx, cs};
    for (size_t i = 0; i < pts.size(); ++i)
        if (sol->particular[i] != 0) fam.base.set(pts[i], sol->particular[i]);
    for (const auto& dir : sol->nullspace) {
        Filter f(ctx.dim);
        for (size_t i = 0; i < pts.size(); ++i)
            if (dir[i] != 0) f.set(pts[i], dir[i]);
        fam.directions.push_back(std::move(f));
    }
    verify_member(fam.base, ctx, cs);
    return fam;
}

Filter instantiate(const AffineFilterFamily& fam, const std::vector<Rational>& params) {
    if (params.size() != fam.directions.size())
        throw std::invalid_argument("parameter count does not match family dimension");
    Filter a = fam.base;
    for (size_t i = 0; i < params.size(); ++i)
        a = add(a, fam.directions[i].scaled(params[i]));
    verify_member(a, fam.ctx, fam.constraints);
    return a;
}

std::optional<std::vector<Rational>> match_parameters(const AffineFilterFamily& fam,
                                                      const Filter& target) {
    // solve sum_i t_i * directions[i] = target - base over the union support
    Filter diff = sub(target, fam.base);
    std::vector<Index> pts;
    {
        std::set<Index> s;
        for (const auto& [k, v] : diff.coeffs()) s.insert(k);
        for (const auto& d : fam.directions)
            for (const auto& [k, v] : d.coeffs()) s.insert(k);
        pts.assign(s.begin(), s.end());
    }
    if (pts.empty()) return std::vector<Rational>(fam.directions.size(), 0);
    RationalMatrix A(pts.size(), std::vector<Rational>(fam.directions.size(), 0));
    std::vector<Rational> b(pts.size(), 0);
    for (size_t r = 0; r < pts.size(); ++r) {
        for (size_t c = 0; c < fam.directions.size(); ++c)
            A[r][c] = fam.directions[c].at(pts[r]);
        b[r] = diff.at(pts[r]);
    }
    auto sol = solve_linear(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    // confirm (free columns were zeroed; reconstruct and compare)
    Filter recon(fam.ctx.dim);
    for (size_t c = 0; c < fam.directions.size(); ++c)
        recon = add(recon, fam.directions[c].scaled((*sol)[c]));
    if (!(recon == diff)) return std::nullopt;
    return sol;
}

DesignResult optimize_sm2(const AffineFilterFamily& fam, const DilationContext& ctx,
                          const std::vector<GridAxis>& grid) {
    if (grid.size() != fam.directions.size())
        throw std::invalid_argument("grid arity does not match family dimension");

    std::vector<std::vector<Rational>> axis_values;
    for (const auto& ax : grid) {
        std::vector<Rational> vals;
        if (ax.step <= 0) throw std::invalid_argument("grid step must be positive");
        for (Rational v = ax.lo; v <= ax.hi; v += ax.step) vals.push_back(v);
        if (vals.empty()) throw std::invalid_argument("empty grid axis");
        axis_values.push_back(std::move(vals));
    }

    DesignResult best;
    bool have_best = false;
    std::vector<size_t> idx(grid.size(), 0);
    while (true) {
        std::vector<Rational> params(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) params[i] = axis_values[i][idx[i]];
        Filter a = instantiate(fam, params);
        SmoothnessEstimate est = sm2_estimate(a, ctx);
        if (!have_best || est.sm2 > best.estimate.sm2) {
            best.params = params;
            best.estimate = est;
            have_best = true;
        }
        int axis = (int)grid.size() - 1;
        while (axis >= 0 && ++idx[axis] >= axis_values[axis].size()) idx[axis--] = 0;
        if (axis < 0) break;
    }
    if (!have_best) {
        // zero-dimensional family: evaluate the single member
        best.params = {};
        best.estimate = sm2_estimate(fam.base, ctx);
    }
    best.certifies_fundamental = best.estimate.sm2 > 0.5 * ctx.dim;
    return best;
}

}  // namespace framelet
