#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framelet/linalg.hpp"

using namespace framelet;

TEST_CASE("unique solution") {
    RationalMatrix A = {{2, 1}, {1, -1}};
    std::vector<Rational> b = {3, 0};
    auto sol = solve_affine(A, b);
    REQUIRE(sol);
    CHECK(sol->particular == std::vector<Rational>{1, 1});
    CHECK(sol->nullspace.empty());
}

TEST_CASE("underdetermined system exposes the nullspace") {
    RationalMatrix A = {{1, 1, 1}};
    std::vector<Rational> b = {1};
    auto sol = solve_affine(A, b);
    REQUIRE(sol);
    CHECK(sol->nullspace.size() == 2);
    // every basis vector is in the kernel
    for (const auto& v : sol->nullspace) {
        Rational s = 0;
        for (const auto& x : v) s += x;
        CHECK(s == 0);
    }
    // particular solution solves the system
    Rational s = 0;
    for (const auto& x : sol->particular) s += x;
    CHECK(s == 1);
}

TEST_CASE("inconsistent system returns nullopt") {
    RationalMatrix A = {{1, 1}, {2, 2}};
    std::vector<Rational> b = {1, 3};
    CHECK(!solve_affine(A, b));
    CHECK(!solve_linear(A, b));
}

TEST_CASE("free variables are zeroed deterministically") {
    RationalMatrix A = {{0, 1}};
    std::vector<Rational> b = {5};
    auto x = solve_linear(A, b);
    REQUIRE(x);
    CHECK((*x)[0] == 0);
    CHECK((*x)[1] == 5);
}

TEST_CASE("exact rationals survive elimination") {
    RationalMatrix A = {{Rational(1, 3), Rational(1, 7)}, {Rational(1, 11), Rational(1, 13)}};
    std::vector<Rational> b = {Rational(1, 2), Rational(1, 5)};
    auto x = solve_linear(A, b);
    REQUIRE(x);
    CHECK(A[0][0] * (*x)[0] + A[0][1] * (*x)[1] == b[0]);
    CHECK(A[1][0] * (*x)[0] + A[1][1] * (*x)[1] == b[1]);
}
