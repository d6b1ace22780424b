#pragma once

#include "framelet/lattice.hpp"

#include <string>

namespace framelet {

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LevelMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// samples value(k) ~ f(M^{-level} k); exact rationals kept while is_exact
struct SampledGrid {
    int level = 0;
    DilationContext ctx;
    std::map<Index, double> values;
    std::map<Index, Rational> exact;  // populated only when is_exact
    bool is_exact = false;
};

// cascade iteration v_{j+1}(k) = d_M sum_m v_j(m) a(k - M m), v_0 = delta;
// exact rationals up to level 4, doubles beyond
SampledGrid subdivide_phi(const Filter& a, const DilationContext& ctx, int n);

// psi(x) = sum_k b(k) phi(M x - k), sampled one level coarser than phiGrid
SampledGrid sample_psi(const Filter& b, const SampledGrid& phiGrid,
                       const DilationContext& ctx);

// format: "csv" (x1,...,xd,value with x = M^{-n} k) or "json"; lex row order
void export_grid(const SampledGrid& g, const std::string& path, const std::string& format);

}  // namespace framelet
