#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "framelet/moments.hpp"
#include "helpers.hpp"

using namespace framelet;
using namespace testutil;

TEST_CASE("haar sum rule and linear-phase orders") {
    auto ctx = ctx_1d();
    Filter a = haar();
    CHECK(sum_rule_order(a, ctx).value == 1);
    CHECK(linear_phase_moment_order(a).value == 1);
    CHECK(vanishing_moment_order(a).value == 0);
}

TEST_CASE("difference filters have the expected vanishing moments") {
    Filter d1 = nabla_delta({1}, 1);
    CHECK(vanishing_moment_order(d1).value == 1);
    Filter d3 = nabla_delta({3}, 1);
    CHECK(vanishing_moment_order(d3).value == 3);
    Filter d22 = nabla_delta({2, 2}, 2);
    CHECK(vanishing_moment_order(d22).value == 4);
}

TEST_CASE("reference low-pass filters have sum rule order 4") {
    CHECK(sum_rule_order(load("quincunx_a.json"), ctx_quincunx()).value == 4);
    CHECK(sum_rule_order(load("quincunx_ta.json"), ctx_quincunx()).value == 4);
    CHECK(sum_rule_order(load("dyadic_a.json"), ctx_2I()).value == 4);
    CHECK(sum_rule_order(load("dyadic_ta.json"), ctx_2I()).value == 4);
    CHECK(sum_rule_order(load("root3_a.json"), ctx_root3()).value == 4);
}

TEST_CASE("reference high-pass filters have the printed vanishing moments") {
    CHECK(vanishing_moment_order(load("quincunx_b1.json")).value == 4);
    CHECK(vanishing_moment_order(load("quincunx_tb1.json")).value == 4);
    CHECK(vanishing_moment_order(load("quincunx_b3.json")).value == 2);
    CHECK(vanishing_moment_order(load("quincunx_tb3.json")).value == 2);
    CHECK(vanishing_moment_order(load("quincunx_b4.json")).value == 2);
    CHECK(vanishing_moment_order(load("quincunx_b5.json")).value == 2);
    CHECK(vanishing_moment_order(load("dyadic_b2.json")).value == 4);
    CHECK(vanishing_moment_order(load("dyadic_tb2.json")).value == 4);
    CHECK(vanishing_moment_order(load("root3_b1.json")).value == 4);
    CHECK(vanishing_moment_order(load("root3_b2.json")).value == 4);
    CHECK(vanishing_moment_order(load("root3_b3.json")).value == 4);
}

TEST_CASE("interpolatory filters: lpm is at least sr") {
    // star(a) = a here, so lpm(a) governs the mixing filter directly
    auto ctx = ctx_quincunx();
    Filter a = load("quincunx_a.json");
    Order sr = sum_rule_order(a, ctx);
    Order lpm = linear_phase_moment_order(a);
    CHECK(lpm.value >= sr.value);
}

TEST_CASE("mixing filter of the delta pair is zero") {
    Filter d = delta(2);
    CHECK(mixing_filter(d, d).is_zero());
}

TEST_CASE("linear phase moments require unit sum") {
    Filter f(1);
    f.set({0}, Rational(1, 3));
    CHECK(linear_phase_moment_order(f).value == 0);
}

TEST_CASE("moment report is consistent with individual queries") {
    auto ctx = ctx_2I();
    Filter a = load("dyadic_a.json");
    MomentReport rep = moment_report(a, ctx);
    CHECK(rep.sr.value == sum_rule_order(a, ctx).value);
    CHECK(rep.vmo.value == vanishing_moment_order(a).value);
    CHECK(rep.lpm.value == linear_phase_moment_order(a).value);
}

TEST_CASE("order rendering") {
    CHECK(order_to_string(Order{3, false}) == "3");
    CHECK(order_to_string(Order{16, true}) == ">=16");
}
