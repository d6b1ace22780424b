#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framelet/smoothness.hpp"
#include "helpers.hpp"

using namespace framelet;
using namespace testutil;

TEST_CASE("filter_power composes transition steps") {
    auto ctx = ctx_1d();
    Filter a = haar();
    Filter a1 = filter_power(a, ctx, 1);
    CHECK(a1 == a);
    Filter a2 = filter_power(a, ctx, 2);
    // hat(a2) = hat(a)(xi) hat(a)(2 xi): constant 1/4 on {0,1,2,3}
    REQUIRE(a2.coeffs().size() == 4);
    for (long k = 0; k <= 3; ++k) CHECK(a2.at({k}) == Rational(1, 4));
}

TEST_CASE("haar refinable function is the box spline of smoothness 1/2") {
    auto ctx = ctx_1d();
    SmoothnessEstimate est = sm2_estimate(haar(), ctx);
    CHECK(est.method == "eig");
    CHECK(est.m == 1);
    CHECK(std::abs(est.sm2 - 0.5) < 0.02);
}

TEST_CASE("both methods agree on the haar filter") {
    auto ctx = ctx_1d();
    SmoothnessOptions opts;
    opts.method = SmoothnessOptions::NormIteration;
    opts.max_n = 14;
    SmoothnessEstimate n = sm2_estimate(haar(), ctx, opts);
    SmoothnessEstimate e = sm2_estimate(haar(), ctx);
    CHECK(std::abs(n.sm2 - e.sm2) < 0.1);
}

TEST_CASE("published two-dimensional smoothness exponents are reproduced") {
    SmoothnessEstimate est = sm2_estimate(load("quincunx_a.json"), ctx_quincunx());
    CHECK(std::abs(est.sm2 - 2.4479) < 0.05);
    est = sm2_estimate(load("quincunx_ta.json"), ctx_quincunx());
    CHECK(std::abs(est.sm2 - 2.5879) < 0.05);
    est = sm2_estimate(load("dyadic_a.json"), ctx_2I());
    CHECK(std::abs(est.sm2 - 2.4408) < 0.05);
    est = sm2_estimate(load("dyadic_ta.json"), ctx_2I());
    CHECK(std::abs(est.sm2 - 1.7658) < 0.05);
    est = sm2_estimate(load("root3_a.json"), ctx_root3());
    CHECK(std::abs(est.sm2 - 2.52996) < 0.05);
}

TEST_CASE("norm iteration cross-checks the eigenvalue method in 2d") {
    SmoothnessOptions opts;
    opts.method = SmoothnessOptions::NormIteration;
    SmoothnessEstimate n = sm2_estimate(load("quincunx_a.json"), ctx_quincunx(), opts);
    SmoothnessEstimate e = sm2_estimate(load("quincunx_a.json"), ctx_quincunx());
    CHECK(n.method == "norm");
    CHECK(std::abs(n.sm2 - e.sm2) < 0.1);
}

TEST_CASE("sm_inf bracket certifies a continuous fundamental function") {
    SmoothnessEstimate est = sm2_estimate(load("quincunx_a.json"), ctx_quincunx());
    auto [lo, hi] = sm_inf_bracket(est, 2);
    CHECK(lo == doctest::Approx(est.sm2 - 1.0));
    CHECK(hi == doctest::Approx(est.sm2));
    CHECK(lo > 0.0);  // continuity certificate
}

TEST_CASE("filters with no sum rules are flagged rather than fatal") {
    // both points lie on the even coset, so the coset sums differ
    Filter f(1);
    f.set({0}, Rational(1, 2));
    f.set({2}, Rational(1, 2));
    SmoothnessEstimate est = sm2_estimate(f, ctx_1d());
    CHECK(est.m == 0);
    CHECK(est.flagged);
}

TEST_CASE("averaging with delta raises smoothness monotonically") {
    // b = (a + delta-shift convolution smoothing): convolving haar with itself
    // gives the hat function, strictly smoother than the box
    auto ctx = ctx_1d();
    Filter hat = convolve(haar(), haar());
    SmoothnessEstimate box = sm2_estimate(haar(), ctx);
    SmoothnessEstimate tri = sm2_estimate(hat, ctx);
    CHECK(tri.sm2 > box.sm2 + 0.5);
    CHECK(std::abs(tri.sm2 - 1.5) < 0.02);
}
