#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "framelet/cascade.hpp"
#include "framelet/design.hpp"
#include "framelet/dual.hpp"
#include "framelet/quasitight.hpp"
#include "framelet/verify.hpp"
#include "helpers.hpp"

using namespace framelet;
using namespace testutil;

namespace {

std::mt19937 rng(20240817u);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-3, 3);
    const int dens[] = {1, 2, 4, 8};
    std::uniform_int_distribution<int> den(0, 3);
    return Rational(num(rng), dens[den(rng)]);
}

Filter random_filter(int dim, long radius, Integer radicand = 1) {
    Filter f(dim, radicand);
    std::uniform_int_distribution<long> pos(-radius, radius);
    std::uniform_int_distribution<int> count(2, 6);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Index k(dim);
        for (auto& x : k) x = pos(rng);
        f.set(k, random_rational());
    }
    return f;
}

std::vector<DilationContext> all_contexts() {
    return {ctx_1d(), ctx_2I(), ctx_quincunx(), ctx_root3(), ctx_shear()};
}

// any interpolatory mask with two sum rules, via the design solver
Filter simple_interpolatory(const DilationContext& ctx) {
    DesignConstraints cs;
    cs.sr_order = 2;
    cs.interpolatory = true;
    Box box{Index(ctx.dim, -3), Index(ctx.dim, 3)};
    return parametrize(box, ctx, cs).base;
}

}  // namespace

TEST_CASE("coset split and merge are mutually inverse in every dilation") {
    for (const auto& ctx : all_contexts()) {
        CAPTURE(ctx.det_abs);
        for (int trial = 0; trial < 20; ++trial) {
            const Integer radicands[] = {1, 2, 3, 5};
            Filter f = random_filter(ctx.dim, 4, radicands[trial % 4]);
            auto parts = coset_split(f, ctx);
            REQUIRE(parts.size() == static_cast<size_t>(ctx.det_abs));
            CHECK(coset_merge(parts, ctx) == f);
        }
    }
}

TEST_CASE("interpolatory members have linear-phase moments at least the sum rules") {
    auto ctx = ctx_quincunx();
    DesignConstraints cs;
    cs.sr_order = 2;
    cs.interpolatory = true;
    AffineFilterFamily fam = parametrize(Box{{-2, -2}, {2, 2}}, ctx, cs);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> params(fam.dimension());
        for (auto& p : params) p = random_rational();
        Filter a = instantiate(fam, params);
        Order sr = sum_rule_order(a, ctx);
        Order lpm = linear_phase_moment_order(a);
        CHECK(lpm.value >= sr.value);
        ++checked;
    }
    CHECK(checked == 100);
    // and on the reference filters themselves
    CHECK(linear_phase_moment_order(load("quincunx_a.json")).value >=
          sum_rule_order(load("quincunx_a.json"), ctx).value);
    CHECK(linear_phase_moment_order(load("dyadic_a.json")).value >=
          sum_rule_order(load("dyadic_a.json"), ctx_2I()).value);
    CHECK(linear_phase_moment_order(load("root3_a.json")).value >=
          sum_rule_order(load("root3_a.json"), ctx_root3()).value);
}

TEST_CASE("dual construction is sound in every dilation") {
    for (const auto& ctx : all_contexts()) {
        CAPTURE(ctx.det_abs);
        Filter a = simple_interpolatory(ctx);
        REQUIRE(is_interpolatory(a, ctx));
        unsigned sr = sum_rule_order(a, ctx).value;
        REQUIRE(sr >= 2);
        DualBank bank = build_dual_bank(a, a, ctx, 1, 1);
        CHECK(verify_dual_bank(bank).identity_holds);
    }
    // and on the reference pairs with full orders
    CHECK(verify_dual_bank(build_dual_bank(load("quincunx_a.json"),
                                           load("quincunx_ta.json"), ctx_quincunx(),
                                           2, 2))
              .identity_holds);
    CHECK(verify_dual_bank(build_dual_bank(load("dyadic_a.json"), load("dyadic_ta.json"),
                                           ctx_2I(), 2, 2))
              .identity_holds);
    CHECK(verify_dual_bank(build_dual_bank(load("root3_a.json"), load("root3_a.json"),
                                           ctx_root3(), 2, 2))
              .identity_holds);
}

TEST_CASE("difference-ideal division reconstructs random inputs") {
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 1 + trial % 2;
        unsigned n = 1 + trial % 3;
        auto mus = multi_indices_of_degree(dim, n);
        Filter f(dim);
        for (const auto& mu : mus)
            f = add(f, convolve(nabla_delta(mu, dim), random_filter(dim, 2)));
        auto vs = difference_ideal_divide(f, n);
        Filter recon(dim);
        for (const auto& [alpha, v] : vs)
            recon = add(recon, convolve(nabla_delta(alpha, dim), v));
        CHECK(recon == f);
    }
}

TEST_CASE("signed square decompositions re-expand to the input") {
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 1 + trial % 2;
        unsigned m = 1 + trial % 2;
        Filter A(dim);
        auto mus = multi_indices_of_degree(dim, m);
        for (size_t i = 0; i < mus.size(); ++i) {
            Filter u = convolve(nabla_delta(mus[i], dim), random_filter(dim, 2));
            Filter sq = convolve(star(u), u);
            A = add(A, i % 2 ? sq.negated() : sq);
        }
        auto terms = hermitian_sos_decompose(A, m);
        Filter recon(dim);
        for (const auto& [sign, u] : terms) {
            Filter sq = convolve(star(u), u);
            recon = add(recon, sign < 0 ? sq.negated() : sq);
            CHECK(vanishing_moment_order(u).value >= m);
        }
        CHECK(recon == A);
    }
}

TEST_CASE("random perturbations break the exact identity") {
    auto ctx = ctx_quincunx();
    DualBank bank =
        build_dual_bank(load("quincunx_a.json"), load("quincunx_ta.json"), ctx, 2, 2);
    std::uniform_int_distribution<size_t> pick(0, bank.tbs.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        DualBank broken = bank;
        size_t i = pick(rng);
        Filter t = broken.tbs[i];
        const auto& [k, v] = *t.coeffs().begin();
        t.set(k, v + Rational(1, 97));
        broken.tbs[i] = t;
        CHECK(!verify_dual_bank(broken).identity_holds);
    }
}

TEST_CASE("subdivision of interpolatory masks interpolates at every level") {
    for (const auto& ctx : all_contexts()) {
        CAPTURE(ctx.det_abs);
        Filter a = simple_interpolatory(ctx);
        SampledGrid g = subdivide_phi(a, ctx, 2);
        auto pow_apply = [&](Index k) { return ctx.apply(ctx.apply(k)); };
        CHECK(g.exact.at(pow_apply(Index(ctx.dim, 0))) == Rational(1));
        for (int trial = 0; trial < 10; ++trial) {
            Index k(ctx.dim);
            std::uniform_int_distribution<long> pos(-3, 3);
            for (auto& x : k) x = pos(rng);
            if (k == Index(ctx.dim, 0)) continue;
            auto it = g.exact.find(pow_apply(k));
            if (it != g.exact.end()) CHECK(it->second == Rational(0));
        }
    }
}
