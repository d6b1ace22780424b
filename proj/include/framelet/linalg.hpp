#pragma once

#include "framelet/rational.hpp"

#include <optional>
#include <vector>

namespace framelet {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solution set of A x = b in the form particular + span(nullspace basis).
// Columns are eliminated left to right, so free columns (and hence the
// nullspace basis) are deterministic for a fixed column ordering.
struct AffineSolution {
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

// nullopt when the system is inconsistent
std::optional<AffineSolution> solve_affine(RationalMatrix A, std::vector<Rational> b);

// minimal-norm-free variant: free variables set to zero (same as
// solve_affine().particular, kept separate for call sites that discard the
// nullspace)
std::optional<std::vector<Rational>> solve_linear(RationalMatrix A, std::vector<Rational> b);

}  // namespace framelet
