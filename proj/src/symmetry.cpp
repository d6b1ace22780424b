#include "framelet/symmetry.hpp"

#include "framelet/moments.hpp"

#include <algorithm>
#include <set>

namespace framelet {

bool matrices_equal(const IntMatrix& A, const IntMatrix& B) { return A == B; }

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    int n = (int)A.size();
    IntMatrix C(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

IntMatrix identity_matrix(int dim) {
    IntMatrix I(dim, std::vector<long>(dim, 0));
    for (int i = 0; i < dim; ++i) I[i][i] = 1;
    return I;
}

namespace {

long det2x2ish(const IntMatrix& A) {
    // determinant via fraction-free expansion, fine for the tiny matrices here
    int n = (int)A.size();
    if (n == 1) return A[0][0];
    long det = 0;
    for (int j = 0; j < n; ++j) {
        IntMatrix minor;
        for (int r = 1; r < n; ++r) {
            std::vector<long> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(A[r][c]);
            minor.push_back(row);
        }
        long term = A[0][j] * det2x2ish(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

Index apply_matrix(const IntMatrix& E, const Index& k) {
    int n = (int)E.size();
    Index out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += E[i][j] * k[j];
    return out;
}

RationalVector apply_matrix(const IntMatrix& E, const RationalVector& x) {
    int n = (int)E.size();
    RationalVector out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += Rational(E[i][j]) * x[j];
    return out;
}

bool is_integral(const RationalVector& x) {
    for (const auto& v : x)
        if (boost::multiprecision::denominator(v) != 1) return false;
    return true;
}

// (I - E) c integral for every E in G
bool center_admissible(const SymmetryGroup& G, const RationalVector& c) {
    for (const auto& E : G.elements) {
        RationalVector ec = apply_matrix(E, c);
        RationalVector diff(c.size());
        for (size_t i = 0; i < c.size(); ++i) diff[i] = c[i] - ec[i];
        if (!is_integral(diff)) return false;
    }
    return true;
}

// check u(E(k-c)+c) == eps u(k) for all k and all non-identity E (the
// identity always acts with sign +1, which permits antisymmetric types)
bool verify_type(const Filter& u, const SymmetryGroup& G, const RationalVector& c, int eps) {
    const IntMatrix id = identity_matrix((int)c.size());
    for (const auto& E : G.elements) {
        if (E == id) continue;
        for (const auto& [k, v] : u.coeffs()) {
            RationalVector mapped(c.size());
            for (size_t i = 0; i < c.size(); ++i) mapped[i] = Rational(k[i]) - c[i];
            mapped = apply_matrix(E, mapped);
            Index target(c.size());
            for (size_t i = 0; i < c.size(); ++i) {
                Rational t = mapped[i] + c[i];
                if (boost::multiprecision::denominator(t) != 1) return false;
                target[i] = boost::multiprecision::numerator(t).convert_to<long>();
            }
            if (u.at(target) != Rational(eps) * v) return false;
        }
    }
    return true;
}

}  // namespace

bool SymmetryGroup::contains(const IntMatrix& E) const {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const IntMatrix& F) { return F == E; });
}

bool SymmetryGroup::verify_axioms() const {
    if (elements.empty()) return false;
    int n = dim();
    if (!contains(identity_matrix(n))) return false;
    for (const auto& E : elements) {
        if (std::labs(det2x2ish(E)) != 1) return false;
        bool has_inverse = false;
        for (const auto& F : elements) {
            if (!contains(mat_mul(E, F))) return false;
            if (mat_mul(E, F) == identity_matrix(n)) has_inverse = true;
        }
        if (!has_inverse) return false;
    }
    return true;
}

SymmetryGroup group_pmI(int dim) {
    SymmetryGroup g;
    g.name = "pmI";
    g.elements.push_back(identity_matrix(dim));
    IntMatrix neg = identity_matrix(dim);
    for (int i = 0; i < dim; ++i) neg[i][i] = -1;
    g.elements.push_back(neg);
    return g;
}

SymmetryGroup group_D4() {
    SymmetryGroup g;
    g.name = "D4";
    std::vector<IntMatrix> base = {
        {{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{0, 1}, {1, 0}}, {{0, 1}, {-1, 0}}};
    for (const auto& E : base) {
        g.elements.push_back(E);
        IntMatrix neg = E;
        for (auto& row : neg)
            for (auto& x : row) x = -x;
        g.elements.push_back(neg);
    }
    return g;
}

SymmetryGroup group_D6() {
    SymmetryGroup g;
    g.name = "D6";
    std::vector<IntMatrix> base = {{{1, 0}, {0, 1}},
                                   {{0, 1}, {1, 0}},
                                   {{-1, 1}, {0, 1}},
                                   {{1, 0}, {1, -1}},
                                   {{0, 1}, {-1, 1}},
                                   {{1, -1}, {1, 0}}};
    for (const auto& E : base) {
        g.elements.push_back(E);
        IntMatrix neg = E;
        for (auto& row : neg)
            for (auto& x : row) x = -x;
        g.elements.push_back(neg);
    }
    return g;
}

SymmetryGroup group_by_name(const std::string& name, int dim) {
    if (name == "D4") return group_D4();
    if (name == "D6") return group_D6();
    if (name == "pmI") return group_pmI(dim);
    throw std::invalid_argument("unknown symmetry group: " + name);
}

bool is_compatible(const DilationContext& ctx, const SymmetryGroup& G) {
    if (G.dim() != ctx.dim) return false;
    for (const auto& E : G.elements) {
        // M E M^{-1} must be an integer matrix that lies in G
        IntMatrix ME = mat_mul(ctx.M, E);
        bool ok = true;
        std::vector<std::vector<Rational>> result(ctx.dim, std::vector<Rational>(ctx.dim, 0));
        // M^{-1} columns: solve via inv_apply on unit vectors
        for (int j = 0; j < ctx.dim; ++j) {
            Index ej(ctx.dim, 0);
            ej[j] = 1;
            RationalVector minv_col = ctx.inv_apply(ej);
            for (int i = 0; i < ctx.dim; ++i) {
                Rational s = 0;
                for (int l = 0; l < ctx.dim; ++l) s += Rational(ME[i][l]) * minv_col[l];
                result[i][j] = s;
            }
        }
        IntMatrix conj_int(ctx.dim, std::vector<long>(ctx.dim));
        for (int i = 0; i < ctx.dim && ok; ++i)
            for (int j = 0; j < ctx.dim; ++j) {
                if (boost::multiprecision::denominator(result[i][j]) != 1) {
                    ok = false;
                    break;
                }
                conj_int[i][j] =
                    boost::multiprecision::numerator(result[i][j]).convert_to<long>();
            }
        if (!ok || !G.contains(conj_int)) return false;
    }
    return true;
}

std::optional<SymmetryType> detect_symmetry(const Filter& u, const SymmetryGroup& G,
                                            const std::vector<RationalVector>& extra_centers) {
    if (u.is_zero()) return std::nullopt;
    auto box = *u.support();
    int d = u.dim();

    std::vector<RationalVector> candidates;
    for (const auto& c : extra_centers)
        if (center_admissible(G, c)) candidates.push_back(c);
    // midpoint of the support box
    RationalVector mid(d);
    for (int i = 0; i < d; ++i) mid[i] = Rational(box.lo[i] + box.hi[i], 2);
    if (center_admissible(G, mid)) candidates.push_back(mid);
    // half-integer lattice inside the box
    std::vector<long> twice_lo(d), twice_hi(d);
    for (int i = 0; i < d; ++i) {
        twice_lo[i] = 2 * box.lo[i];
        twice_hi[i] = 2 * box.hi[i];
    }
    Index t = twice_lo;
    while (true) {
        RationalVector c(d);
        for (int i = 0; i < d; ++i) c[i] = Rational(t[i], 2);
        if (center_admissible(G, c)) candidates.push_back(c);
        int axis = d - 1;
        while (axis >= 0 && ++t[axis] > twice_hi[axis]) t[axis--] = twice_lo[axis];
        if (axis < 0) break;
    }

    for (const auto& c : candidates)
        for (int eps : {1, -1})
            if (verify_type(u, G, c, eps)) return SymmetryType{G, c, eps};
    return std::nullopt;
}

SymmetryGroup coset_symmetry_subgroup(const SymmetryGroup& G, const Index& gamma,
                                      const DilationContext& ctx) {
    if (!is_compatible(ctx, G)) throw NotCompatible("dilation is not compatible with the group");
    RationalVector minv_gamma = ctx.inv_apply(gamma);
    SymmetryGroup sub;
    sub.name = G.name + "_coset";
    for (const auto& E : G.elements) {
        RationalVector ec = apply_matrix(E, minv_gamma);
        RationalVector diff(minv_gamma.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = minv_gamma[i] - ec[i];
        if (is_integral(diff)) sub.elements.push_back(E);
    }
    return sub;
}

SymmetryType transfer_symmetry(const SymmetryType& t, const Index& gamma,
                               const DilationContext& ctx) {
    if (!is_compatible(ctx, t.group)) throw NotCompatible("dilation is not compatible with the group");
    SymmetryGroup conj;
    conj.name = "M" + t.group.name + "Minv";
    for (const auto& E : t.group.elements) {
        IntMatrix ME = mat_mul(ctx.M, E);
        IntMatrix out(ctx.dim, std::vector<long>(ctx.dim));
        for (int j = 0; j < ctx.dim; ++j) {
            Index ej(ctx.dim, 0);
            ej[j] = 1;
            RationalVector minv_col = ctx.inv_apply(ej);
            for (int i = 0; i < ctx.dim; ++i) {
                Rational s = 0;
                for (int l = 0; l < ctx.dim; ++l) s += Rational(ME[i][l]) * minv_col[l];
                out[i][j] = boost::multiprecision::numerator(s).convert_to<long>();
            }
        }
        conj.elements.push_back(out);
    }
    RationalVector center(ctx.dim);
    RationalVector mc(ctx.dim, 0);
    for (int i = 0; i < ctx.dim; ++i)
        for (int j = 0; j < ctx.dim; ++j) mc[i] += Rational(ctx.M[i][j]) * t.center[j];
    for (int i = 0; i < ctx.dim; ++i) center[i] = Rational(gamma[i]) + mc[i];
    return {conj, center, t.sign};
}

Lemma31Diagnostic lemma31_check(const Filter& a, const DilationContext& ctx,
                                const SymmetryType& t) {
    // need some E with I - E invertible
    const IntMatrix* chosen = nullptr;
    for (const auto& E : t.group.elements) {
        IntMatrix ImE = identity_matrix(ctx.dim);
        for (int i = 0; i < ctx.dim; ++i)
            for (int j = 0; j < ctx.dim; ++j) ImE[i][j] -= E[i][j];
        if (det2x2ish(ImE) != 0) {
            chosen = &E;
            break;
        }
    }
    if (!chosen) throw ConditionNotMet("no group element E with I - E invertible");

    RationalVector ec = apply_matrix(*chosen, t.center);
    RationalVector diff(t.center.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = t.center[i] - ec[i];
    // branch (1): (I - E)c in M Z^d
    bool in_MZ = false;
    if (is_integral(diff)) {
        Index as_int(ctx.dim);
        for (int i = 0; i < ctx.dim; ++i)
            as_int[i] = boost::multiprecision::numerator(diff[i]).convert_to<long>();
        in_MZ = is_integral(ctx.inv_apply(as_int));
    }
    Order o = sum_rule_order(a, ctx);
    if (in_MZ) {
        bool zero_center = true;
        for (const auto& c : t.center)
            if (c != 0) zero_center = false;
        return {1, t.sign == 1 && zero_center, o.value};
    }
    return {2, !o.at_least_cap && o.value <= 1, o.value};
}

}  // namespace framelet
