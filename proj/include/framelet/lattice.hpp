#pragma once

#include <map>

#include "framelet/filter.hpp"

namespace framelet {

using IntMatrix = std::vector<std::vector<long>>;  // row-major, square
using RationalVector = std::vector<Rational>;

struct NotExpansive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSquare : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingCoset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dilation matrix M together with the index algebra derived from it:
// coset representatives Gamma_M = M[0,1)^d cap Z^d (0 first, then lex) and
// dual representatives Omega_M = {M^{-T} gamma mod 1} in the same order.
struct DilationContext {
    IntMatrix M;
    int dim;
    long det_abs;                        // d_M
    std::vector<Index> gamma;            // Gamma_M, gamma[0] == 0
    std::vector<RationalVector> omega;   // Omega_M, omega[0] == 0
    double spectral_radius;              // rho(M)

    Index apply(const Index& k) const;             // M k
    RationalVector inv_apply(const Index& k) const;  // M^{-1} k, exact
    // residue index into gamma for an arbitrary lattice point
    int coset_index(const Index& k) const;
};

DilationContext make_context(const IntMatrix& M);

// u^{[gamma,M]}(k) = u(gamma + M k), one filter per coset representative
std::vector<Filter> coset_split(const Filter& u, const DilationContext& ctx);

// exact inverse of coset_split; parts indexed like ctx.gamma
Filter coset_merge(const std::vector<Filter>& parts, const DilationContext& ctx);

// result(gamma + M k) = u(k), zero off that coset
Filter upsample_shift(const Filter& u, const Index& gamma, const DilationContext& ctx);

// coefficients moved to M Z^d: result(M k) = u(k)  (gamma = 0 case)
Filter upsample(const Filter& u, const DilationContext& ctx);

// a(M k) == d_M^{-1} delta(k) for all k
bool is_interpolatory(const Filter& u, const DilationContext& ctx);

}  // namespace framelet
