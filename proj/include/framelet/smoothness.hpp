#pragma once

#include "framelet/lattice.hpp"
#include "framelet/moments.hpp"

namespace framelet {

struct SumRuleZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SmoothnessOptions {
    enum Method { Eig, NormIteration } method = Eig;
    unsigned max_n = 12;          // norm-iteration depth
    long volume_cap = 400000;     // stop norm iteration once support exceeds this
};

struct SmoothnessEstimate {
    double sm2 = 0.0;
    std::string method;
    std::vector<double> diagnostics;  // eigenvalue moduli or ratio iterates
    double sm_inf_lower = 0.0, sm_inf_upper = 0.0;
    unsigned m = 0;       // sum-rule order used
    bool flagged = false; // m == 0 or truncated iteration
};

// a_n with hat(a_n)(xi) = hat(a)(xi) hat(a)(M^T xi) ... hat(a)((M^T)^{n-1} xi)
Filter filter_power(const Filter& a, const DilationContext& ctx, unsigned n);

SmoothnessEstimate sm2_estimate(const Filter& a, const DilationContext& ctx,
                                const SmoothnessOptions& opts = {});

// (sm2 - d/2, sm2); a positive lower bound certifies a continuous
// fundamental refinable function
std::pair<double, double> sm_inf_bracket(const SmoothnessEstimate& est, int d);

}  // namespace framelet
