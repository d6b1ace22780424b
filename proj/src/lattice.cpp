#include "framelet/lattice.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>

namespace framelet {

namespace {

// exact inverse of an integer matrix over the rationals
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& M) {
    int n = (int)M.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = M[i][j];
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw NotExpansive("singular dilation matrix");
        std::swap(aug[col], aug[pivot]);
        Rational p = aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Integer floor_rational(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

Rational frac_rational(const Rational& r) { return r - Rational(floor_rational(r)); }

}  // namespace

Index DilationContext::apply(const Index& k) const {
    Index out(dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i] += M[i][j] * k[j];
    return out;
}

RationalVector DilationContext::inv_apply(const Index& k) const {
    auto inv = rational_inverse(M);
    RationalVector out(dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i] += inv[i][j] * Rational(k[j]);
    return out;
}

int DilationContext::coset_index(const Index& k) const {
    RationalVector x = inv_apply(k);
    Index residue(dim);
    // residue = k - M*floor(M^{-1} k) lands in M[0,1)^d cap Z^d
    Index fl(dim);
    for (int i = 0; i < dim; ++i) fl[i] = floor_rational(x[i]).convert_to<long>();
    Index mfl = apply(fl);
    for (int i = 0; i < dim; ++i) residue[i] = k[i] - mfl[i];
    for (size_t g = 0; g < gamma.size(); ++g)
        if (gamma[g] == residue) return (int)g;
    throw std::logic_error("coset representative lookup failed");
}

DilationContext make_context(const IntMatrix& M) {
    int n = (int)M.size();
    for (const auto& row : M)
        if ((int)row.size() != n) throw NotSquare("dilation matrix must be square");
    if (n < 1) throw NotSquare("empty dilation matrix");

    Eigen::MatrixXd Md(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Md(i, j) = double(M[i][j]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(Md);
    for (int i = 0; i < n; ++i)
        if (std::abs(es.eigenvalues()[i]) <= 1.0 + 1e-9)
            throw NotExpansive("all eigenvalues of M must exceed 1 in modulus");

    DilationContext ctx;
    ctx.M = M;
    ctx.dim = n;
    ctx.spectral_radius = es.eigenvalues().cwiseAbs().maxCoeff();

    auto inv = rational_inverse(M);
    Rational det = 1;  // recompute |det| exactly from the LU-free route: use integer cofactor via Eigen? keep exact:
    {
        // |det M| = 1 / |det M^{-1}|; get it from the inverse's denominators is
        // awkward, so do exact fraction-free elimination on a copy instead.
        std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
        det = 1;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (A[r][col] != 0) { pivot = r; break; }
            if (pivot < 0) { det = 0; break; }
            if (pivot != col) { std::swap(A[col], A[pivot]); det = -det; }
            det *= A[col][col];
            for (int r = col + 1; r < n; ++r) {
                Rational f = A[r][col] / A[col][col];
                for (int j = col; j < n; ++j) A[r][j] -= f * A[col][j];
            }
        }
    }
    Rational abs_det = det < 0 ? Rational(-det) : det;
    Integer det_int = boost::multiprecision::numerator(abs_det);
    ctx.det_abs = det_int.convert_to<long>();

    // candidates: bounding box of the vertices M v, v in {0,1}^d
    Index lo(n, 0), hi(n, 0);
    for (long mask = 0; mask < (1L << n); ++mask) {
        Index v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        Index mv(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mv[i] += M[i][j] * v[j];
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], mv[i]);
            hi[i] = std::max(hi[i], mv[i]);
        }
    }
    std::vector<Index> members;
    Index k = lo;
    while (true) {
        RationalVector x(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x[i] += inv[i][j] * Rational(k[j]);
        bool inside = true;
        for (int i = 0; i < n; ++i)
            if (x[i] < 0 || x[i] >= 1) { inside = false; break; }
        if (inside) members.push_back(k);
        int axis = n - 1;
        while (axis >= 0 && ++k[axis] > hi[axis]) k[axis--] = lo[axis];
        if (axis < 0) break;
    }
    std::sort(members.begin(), members.end());
    Index zero(n, 0);
    ctx.gamma.push_back(zero);
    for (const auto& m : members)
        if (m != zero) ctx.gamma.push_back(m);
    if ((long)ctx.gamma.size() != ctx.det_abs)
        throw std::logic_error("coset enumeration does not match |det M|");

    // Omega_M = {M^{-T} gamma mod 1}, same ordering as Gamma_M
    for (const auto& g : ctx.gamma) {
        RationalVector w(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += inv[j][i] * Rational(g[j]);  // M^{-T} = (M^{-1})^T
        for (int i = 0; i < n; ++i) w[i] = frac_rational(w[i]);
        ctx.omega.push_back(w);
    }
    return ctx;
}

std::vector<Filter> coset_split(const Filter& u, const DilationContext& ctx) {
    if (u.dim() != ctx.dim) throw std::invalid_argument("dimension mismatch in coset_split");
    std::vector<Filter> parts(ctx.gamma.size(), Filter(ctx.dim, u.radicand()));
    auto inv = rational_inverse(ctx.M);
    for (const auto& [k, c] : u.coeffs()) {
        int g = ctx.coset_index(k);
        // solve M j = k - gamma exactly
        Index diff(ctx.dim);
        for (int i = 0; i < ctx.dim; ++i) diff[i] = k[i] - ctx.gamma[g][i];
        Index j(ctx.dim, 0);
        for (int i = 0; i < ctx.dim; ++i) {
            Rational x = 0;
            for (int l = 0; l < ctx.dim; ++l) x += inv[i][l] * Rational(diff[l]);
            j[i] = boost::multiprecision::numerator(x).convert_to<long>();
        }
        parts[g].set(j, c);
    }
    return parts;
}

Filter coset_merge(const std::vector<Filter>& parts, const DilationContext& ctx) {
    if (parts.size() != ctx.gamma.size()) throw MissingCoset("coset_merge needs one part per representative");
    Filter out(ctx.dim);
    bool first = true;
    for (size_t g = 0; g < parts.size(); ++g) {
        Filter lifted = upsample_shift(parts[g], ctx.gamma[g], ctx);
        if (lifted.is_zero()) continue;
        if (first) {
            out = lifted;
            first = false;
        } else {
            out = add(out, lifted);
        }
    }
    return out;
}

Filter upsample_shift(const Filter& u, const Index& gamma, const DilationContext& ctx) {
    if (u.dim() != ctx.dim) throw std::invalid_argument("dimension mismatch in upsample_shift");
    Filter out(ctx.dim, u.radicand());
    for (const auto& [k, c] : u.coeffs()) {
        Index target = ctx.apply(k);
        for (int i = 0; i < ctx.dim; ++i) target[i] += gamma[i];
        out.set(target, c);
    }
    return out;
}

Filter upsample(const Filter& u, const DilationContext& ctx) {
    return upsample_shift(u, Index(ctx.dim, 0), ctx);
}

bool is_interpolatory(const Filter& u, const DilationContext& ctx) {
    if (u.dim() != ctx.dim) return false;
    if (u.radicand() != 1) return false;
    Filter zero_coset = coset_split(u, ctx)[0];
    Filter expected = delta(ctx.dim).scaled(Rational(1, ctx.det_abs));
    return zero_coset == expected;
}

}  // namespace framelet
