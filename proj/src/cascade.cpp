#include "framelet/cascade.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace framelet {

namespace {

constexpr int kExactLevelCap = 4;

std::optional<Index> integral_point(const RationalVector& q) {
    Index p(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (boost::multiprecision::denominator(q[i]) != 1) return std::nullopt;
        p[i] = (long)boost::multiprecision::numerator(q[i]).convert_to<long long>();
    }
    return p;
}

}  // namespace

SampledGrid subdivide_phi(const Filter& a, const DilationContext& ctx, int n) {
    if (a.radicand() != 1 || a.coeff_sum() != 1)
        throw NotNormalized("subdivision mask must be rational with coefficient sum 1");
    if (n < 0) throw std::invalid_argument("level must be nonnegative");

    SampledGrid g;
    g.ctx = ctx;
    g.level = 0;
    g.is_exact = true;
    g.exact[Index(ctx.dim, 0)] = 1;

    Rational dm(ctx.det_abs);
    for (int lvl = 1; lvl <= n; ++lvl) {
        if (g.is_exact && lvl > kExactLevelCap) {
            for (const auto& [k, v] : g.exact) g.values[k] = to_double(v);
            g.exact.clear();
            g.is_exact = false;
        }
        if (g.is_exact) {
            std::map<Index, Rational> next;
            for (const auto& [m, vm] : g.exact) {
                Index Mm = ctx.apply(m);
                for (const auto& [j, aj] : a.coeffs()) {
                    Index k(ctx.dim);
                    for (int i = 0; i < ctx.dim; ++i) k[i] = Mm[i] + j[i];
                    next[k] += dm * vm * aj;
                }
            }
            g.exact = std::move(next);
        } else {
            std::map<Index, double> next;
            double dmd = (double)ctx.det_abs;
            for (const auto& [m, vm] : g.values) {
                Index Mm = ctx.apply(m);
                for (const auto& [j, aj] : a.coeffs()) {
                    Index k(ctx.dim);
                    for (int i = 0; i < ctx.dim; ++i) k[i] = Mm[i] + j[i];
                    next[k] += dmd * vm * to_double(aj);
                }
            }
            g.values = std::move(next);
        }
        g.level = lvl;
    }
    if (g.is_exact)
        for (const auto& [k, v] : g.exact) g.values[k] = to_double(v);
    return g;
}

SampledGrid sample_psi(const Filter& b, const SampledGrid& phiGrid,
                       const DilationContext& ctx) {
    if (phiGrid.level < 1) throw LevelMismatch("phi grid must be at least level 1");
    int n = phiGrid.level;
    int d = ctx.dim;
    SampledGrid out;
    out.ctx = ctx;
    out.level = n - 1;
    out.is_exact = phiGrid.is_exact && b.radicand() == 1;

    // psi(M^{-(n-1)} j) = sum_k b(k) phi(M^{-n} p) with p = M^2 j - M^n k;
    // invert p + M^n k = M^2 j for each grid point p and mask point k
    double scale = std::sqrt(b.radicand().convert_to<double>());
    for (const auto& [k, bk] : b.coeffs()) {
        Index Mnk = k;
        for (int t = 0; t < n; ++t) Mnk = ctx.apply(Mnk);
        for (const auto& [p, phi] : phiGrid.values) {
            Index s(d);
            for (int i = 0; i < d; ++i) s[i] = p[i] + Mnk[i];
            auto half = integral_point(ctx.inv_apply(s));
            if (!half) continue;
            auto j = integral_point(ctx.inv_apply(*half));
            if (!j) continue;
            out.values[*j] += scale * to_double(bk) * phi;
            if (out.is_exact) out.exact[*j] += bk * phiGrid.exact.at(p);
        }
    }
    if (out.is_exact)
        for (auto it = out.exact.begin(); it != out.exact.end();) {
            if (it->second == 0)
                it = out.exact.erase(it);
            else
                ++it;
        }
    for (auto it = out.values.begin(); it != out.values.end();) {
        if (it->second == 0.0 && (!out.is_exact || !out.exact.count(it->first)))
            it = out.values.erase(it);
        else
            ++it;
    }
    return out;
}

void export_grid(const SampledGrid& g, const std::string& path, const std::string& format) {
    if (format != "csv" && format != "json")
        throw IOError("UnsupportedFormat: " + format);
    std::ofstream out(path);
    if (!out) throw IOError("cannot open " + path);

    // exact M^{-1} as a rational matrix, applied level times per point
    int d = g.ctx.dim;
    std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d, 0));
    for (int c = 0; c < d; ++c) {
        Index e(d, 0);
        e[c] = 1;
        RationalVector col = g.ctx.inv_apply(e);
        for (int r = 0; r < d; ++r) inv[r][c] = col[r];
    }
    auto coords = [&](const Index& k) {
        RationalVector q(d);
        for (int i = 0; i < d; ++i) q[i] = Rational(k[i]);
        for (int t = 0; t < g.level; ++t) {
            RationalVector next(d, 0);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) next[r] += inv[r][c] * q[c];
            q = std::move(next);
        }
        std::vector<double> x(d);
        for (int i = 0; i < d; ++i) x[i] = to_double(q[i]);
        return x;
    };

    if (format == "csv") {
        for (size_t i = 0; i < (size_t)g.ctx.dim; ++i) out << "x" << (i + 1) << ",";
        out << "value\n";
        for (const auto& [k, v] : g.values) {
            for (double x : coords(k)) out << x << ",";
            out << v << "\n";
        }
    } else {
        nlohmann::json j;
        j["level"] = g.level;
        std::string dil;
        for (int r = 0; r < g.ctx.dim; ++r) {
            for (int c = 0; c < g.ctx.dim; ++c)
                dil += std::to_string(g.ctx.M[r][c]) + (c + 1 < g.ctx.dim ? " " : "");
            if (r + 1 < g.ctx.dim) dil += "; ";
        }
        j["dilation"] = dil;
        j["points"] = nlohmann::json::array();
        j["values"] = nlohmann::json::array();
        for (const auto& [k, v] : g.values) {
            j["points"].push_back(k);
            j["values"].push_back(v);
        }
        out << j.dump(2) << "\n";
    }
    if (!out) throw IOError("write failed for " + path);
}

}  // namespace framelet
