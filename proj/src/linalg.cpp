#include "framelet/linalg.hpp"

#include <algorithm>

namespace framelet {

std::optional<AffineSolution> solve_affine(RationalMatrix A, std::vector<Rational> b) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");

    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        // exact pivoting: pick the entry with the smallest representation to
        // keep fractions from ballooning
        size_t best = rows;
        for (size_t r = rank; r < rows; ++r) {
            if (A[r][col] == 0) continue;
            if (best == rows) { best = r; continue; }
            auto size_of = [](const Rational& q) {
                return boost::multiprecision::numerator(q).str().size() +
                       boost::multiprecision::denominator(q).str().size();
            };
            if (size_of(A[r][col]) < size_of(A[best][col])) best = r;
        }
        if (best == rows) continue;
        std::swap(A[rank], A[best]);
        std::swap(b[rank], b[best]);
        Rational p = A[rank][col];
        for (size_t j = col; j < cols; ++j) A[rank][j] /= p;
        b[rank] /= p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_of_col[col] = (int)rank;
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(cols, 0);
    for (size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) sol.particular[col] = b[pivot_of_col[col]];

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> dir(cols, 0);
        dir[free_col] = 1;
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) dir[col] = -A[pivot_of_col[col]][free_col];
        sol.nullspace.push_back(std::move(dir));
    }
    return sol;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix A, std::vector<Rational> b) {
    auto sol = solve_affine(std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    return sol->particular;
}

}  // namespace framelet
