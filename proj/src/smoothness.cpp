#include "framelet/smoothness.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>

namespace framelet {

Filter filter_power(const Filter& a, const DilationContext& ctx, unsigned n) {
    if (n < 1) throw std::invalid_argument("filter power needs n >= 1");
    Filter out = a;
    for (unsigned i = 1; i < n; ++i) out = convolve(a, upsample(out, ctx));
    return out;
}

namespace {

// smallest K with K >= M^{-1}(K + supp(c)) cap Z^d, grown from supp(c)
std::vector<Index> invariant_support(const Filter& c, const DilationContext& ctx) {
    std::set<Index> K;
    for (const auto& [k, v] : c.coeffs()) K.insert(k);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Index> frontier(K.begin(), K.end());
        for (const auto& k : frontier) {
            for (const auto& [f, v] : c.coeffs()) {
                Index s(ctx.dim);
                for (int i = 0; i < ctx.dim; ++i) s[i] = k[i] + f[i];
                RationalVector q = ctx.inv_apply(s);
                Index pre(ctx.dim);
                bool integral = true;
                for (int i = 0; i < ctx.dim; ++i) {
                    if (boost::multiprecision::denominator(q[i]) != 1) {
                        integral = false;
                        break;
                    }
                    pre[i] = (long)boost::multiprecision::numerator(q[i]).convert_to<long long>();
                }
                if (integral && K.insert(pre).second) grew = true;
            }
        }
    }
    return {K.begin(), K.end()};
}

double eig_method(const Filter& a, const DilationContext& ctx, unsigned m,
                  std::vector<double>& diag) {
    Filter c = convolve(star(a), a);  // radicand squares away
    auto K = invariant_support(c, ctx);
    int n = (int)K.size();
    std::map<Index, int> pos;
    for (int i = 0; i < n; ++i) pos[K[i]] = i;

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    double dm = (double)ctx.det_abs;
    for (int r = 0; r < n; ++r) {
        Index Mk = ctx.apply(K[r]);
        for (int col = 0; col < n; ++col) {
            Index diff(ctx.dim);
            for (int i = 0; i < ctx.dim; ++i) diff[i] = Mk[i] - K[col][i];
            Rational v = c.at(diff);
            if (v != 0) T(r, col) = dm * to_double(v);
        }
    }

    // restrict to {w : sum_k w(k) k^mu = 0, |mu| < 2m}
    auto mus = multi_indices_below(ctx.dim, 2 * m);
    Eigen::MatrixXd P(mus.size(), n);
    for (size_t r = 0; r < mus.size(); ++r)
        for (int col = 0; col < n; ++col)
            P(r, col) = (double)index_power(K[col], mus[r]).convert_to<double>();

    Eigen::MatrixXd Q;
    if (mus.empty()) {
        Q = Eigen::MatrixXd::Identity(n, n);
    } else {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(P);
        Eigen::MatrixXd kernel = lu.kernel();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
        Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, (int)kernel.cols());
    }
    Eigen::MatrixXd R = Q.transpose() * T * Q;
    Eigen::EigenSolver<Eigen::MatrixXd> es(R, false);
    double rho = 0.0;
    for (int i = 0; i < R.rows(); ++i) {
        diag.push_back(std::abs(es.eigenvalues()[i]));
        rho = std::max(rho, diag.back());
    }
    return rho;  // spectral radius of the restricted transition matrix
}

using DenseMap = std::map<Index, double>;

DenseMap to_dense(const Filter& f) {
    DenseMap out;
    double scale = std::sqrt(f.radicand().convert_to<double>());
    for (const auto& [k, v] : f.coeffs()) out[k] = scale * to_double(v);
    return out;
}

DenseMap convolve_dense(const DenseMap& u, const DenseMap& v, int d) {
    DenseMap out;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v) {
            Index k(d);
            for (int i = 0; i < d; ++i) k[i] = ku[i] + kv[i];
            out[k] += cu * cv;
        }
    return out;
}

DenseMap upsample_dense(const DenseMap& u, const DilationContext& ctx) {
    DenseMap out;
    for (const auto& [k, v] : u) out[ctx.apply(k)] = v;
    return out;
}

double l2_norm(const DenseMap& u) {
    double s = 0;
    for (const auto& [k, v] : u) s += v * v;
    return std::sqrt(s);
}

double norm_method(const Filter& a, const DilationContext& ctx, unsigned m, unsigned max_n,
                   long volume_cap, std::vector<double>& diag, bool& truncated) {
    DenseMap a0 = to_dense(a);
    std::vector<DenseMap> seeds;
    for (const auto& mu : multi_indices_of_degree(ctx.dim, m))
        seeds.push_back(to_dense(nabla_delta(mu, ctx.dim)));

    DenseMap an = a0;
    double prev = 0.0, ratio = 0.0;
    for (unsigned n = 1; n <= max_n; ++n) {
        double best = 0.0;
        for (const auto& s : seeds)
            best = std::max(best, l2_norm(convolve_dense(s, an, ctx.dim)));
        if (n > 1) {
            ratio = best / prev;
            diag.push_back(ratio);
        }
        prev = best;
        if ((long)an.size() > volume_cap) {
            truncated = true;
            break;
        }
        if (n < max_n) an = convolve_dense(a0, upsample_dense(an, ctx), ctx.dim);
    }
    return (double)ctx.det_abs * ratio;
}

}  // namespace

SmoothnessEstimate sm2_estimate(const Filter& a, const DilationContext& ctx,
                                const SmoothnessOptions& opts) {
    SmoothnessEstimate est;
    est.m = sum_rule_order(a, ctx).value;
    if (est.m == 0) est.flagged = true;

    double rho_m;
    if (opts.method == SmoothnessOptions::Eig) {
        est.method = "eig";
        double rho_restricted = eig_method(a, ctx, est.m, est.diagnostics);
        rho_m = std::sqrt((double)ctx.det_abs * rho_restricted);
    } else {
        est.method = "norm";
        bool truncated = false;
        rho_m = norm_method(a, ctx, est.m, opts.max_n, opts.volume_cap, est.diagnostics,
                            truncated);
        if (truncated) est.flagged = true;
    }

    est.sm2 = 0.5 * ctx.dim - std::log(rho_m) / std::log(ctx.spectral_radius);
    auto [lo, hi] = sm_inf_bracket(est, ctx.dim);
    est.sm_inf_lower = lo;
    est.sm_inf_upper = hi;
    return est;
}

std::pair<double, double> sm_inf_bracket(const SmoothnessEstimate& est, int d) {
    return {est.sm2 - 0.5 * d, est.sm2};
}

}  // namespace framelet
