#pragma once

#include "framelet/bank.hpp"

#include <map>

namespace framelet {

struct NotInterpolatory : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientVanishingMoments : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoSolutionInBox : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadOrderSplit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// h_j = d_M^{-1} delta - d_M star(a^{[gamma_j]}) * ta^{[gamma_j]}, j in [2, d_M]
// (1-based coset index, matching the paper's numbering of Gamma_M)
Filter coset_defect(const Filter& a, const Filter& ta, int j, const DilationContext& ctx);

// {v_alpha}_{|alpha|=n} with sum_alpha nabla^alpha delta * v_alpha == h,
// solved as an exact linear system on support-tight boxes and verified by
// reconvolution before returning
std::map<MultiIndex, Filter> difference_ideal_divide(const Filter& h, unsigned n);

// per nonzero v_alpha: u = star(nabla^{mu}delta), tu = nabla^{nu}delta * v_alpha
// with mu + nu = alpha, |mu| = n1, |nu| = n2, mu chosen graded-lex-first
std::vector<std::pair<Filter, Filter>> split_vanishing_factors(
    const std::map<MultiIndex, Filter>& vs, unsigned n1, unsigned n2);

DualBank build_dual_bank(const Filter& a, const Filter& ta, const DilationContext& ctx,
                         unsigned n1, unsigned n2, bool merge_proportional = false);

}  // namespace framelet
