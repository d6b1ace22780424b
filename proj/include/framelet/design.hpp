#pragma once

#include "framelet/smoothness.hpp"
#include "framelet/symmetry.hpp"

namespace framelet {

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConstraintViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DesignConstraints {
    bool normalization = true;          // sum a(k) = 1
    unsigned sr_order = 0;              // coset-moment equalities for |mu| < sr_order
    bool interpolatory = false;         // a(M k) = delta(k)/d_M
    std::optional<SymmetryType> symmetry;
};

// affine solution set of the design system: every member is
// base + sum_i t_i * directions[i]
struct AffineFilterFamily {
    Filter base;
    std::vector<Filter> directions;
    DilationContext ctx;
    DesignConstraints constraints;

    size_t dimension() const { return directions.size(); }
};

AffineFilterFamily parametrize(const Box& box, const DilationContext& ctx,
                               const DesignConstraints& constraints);

Filter instantiate(const AffineFilterFamily& fam, const std::vector<Rational>& params);

// exact coordinates of target within the family, if it belongs to it
std::optional<std::vector<Rational>> match_parameters(const AffineFilterFamily& fam,
                                                      const Filter& target);

struct GridAxis {
    Rational lo, hi, step;
};

struct DesignResult {
    std::vector<Rational> params;
    SmoothnessEstimate estimate;
    bool certifies_fundamental = false;  // sm2 > d/2
};

DesignResult optimize_sm2(const AffineFilterFamily& fam, const DilationContext& ctx,
                          const std::vector<GridAxis>& grid);

}  // namespace framelet
