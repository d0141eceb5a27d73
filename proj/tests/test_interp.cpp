#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzv/interp.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {
Complex cval(double re, double im, Prec bits) {
    Complex z(bits);
    z.re().set_d(re);
    z.im().set_d(im);
    return z;
}
Real rval(double x, Prec bits) {
    Real v(bits);
    v.set_d(x);
    return v;
}
} // namespace

TEST_CASE("pivot weights match the worked examples") {
    PrecisionContext ctx;
    CHECK(pf_weight({5}, 1, ctx) == Real(1, ctx.bits));
    // (1/(1-2)) * (3/(3-2)) = -3 ; (2/(2-1)) * (3/(3-1)) = 3
    CHECK(pf_weight({1, 2, 3}, 2, ctx) == Real(-3, ctx.bits));
    CHECK(pf_weight({1, 2, 3}, 1, ctx) == Real(3, ctx.bits));

    WeightedTerm wt = weighted_term({2, 5, 9}, 3, ctx);
    CHECK(wt.pivot == 3);
    CHECK(wt.value == 9);

    CHECK_THROWS_AS(pf_weight({3, 2}, 1, ctx), invalid_input);
    CHECK_THROWS_AS(pf_weight({2, 2}, 1, ctx), invalid_input);
    CHECK_THROWS_AS(pf_weight({1, 2}, 3, ctx), invalid_input);
    CHECK_THROWS_AS(pf_weight({}, 1, ctx), invalid_input);
}

TEST_CASE("pivot weight sign is (-1)^(i-1)") {
    PrecisionContext ctx;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        std::vector<long> n;
        long cur = 0;
        for (int j = 0; j < r; ++j) {
            cur += 1 + static_cast<long>(rng() % 9);
            n.push_back(cur);
        }
        for (int i = 1; i <= r; ++i) {
            Real w = pf_weight(n, i, ctx);
            CHECK(w.sign() == ((i - 1) % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("power-sum identity: worked examples") {
    PrecisionContext ctx;
    std::vector<Real> a = {Real(2, ctx.bits), Real(3, ctx.bits)};
    Real lhs = lemma21_lhs(a, 1, ctx);
    Real rhs = lemma21_rhs(a, 1, ctx);
    CHECK(lhs == Real(5, ctx.bits));
    CHECK(rhs == Real(5, ctx.bits));

    // r = 1: both sides are c^m
    std::vector<Real> c = {rval(-2.5, ctx.bits)};
    CHECK(lemma21_lhs(c, 3, ctx) == rval(-15.625, ctx.bits));
    CHECK(lemma21_rhs(c, 3, ctx) == rval(-15.625, ctx.bits));

    std::vector<Real> dup = {Real(2, ctx.bits), Real(2, ctx.bits)};
    CHECK_THROWS_AS(lemma21_rhs(dup, 1, ctx), invalid_input);
    CHECK_THROWS_AS(lemma21_lhs(dup, 1, ctx), invalid_input);
}

TEST_CASE("power-sum identity holds exactly for random rational inputs") {
    PrecisionContext ctx;
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5);
        int m = static_cast<int>(rng() % 7);
        std::vector<long> nums;
        while (static_cast<int>(nums.size()) < r) {
            long q = static_cast<long>(rng() % 81) - 40;
            bool dup = false;
            for (long s : nums) dup = dup || s == q;
            if (!dup) nums.push_back(q);
        }
        std::vector<Real> a;
        for (long q : nums) {
            Real v(q, ctx.bits);
            v /= 4;
            a.push_back(std::move(v));
        }
        Real lhs = lemma21_lhs(a, m, ctx);
        Real rhs = lemma21_rhs(a, m, ctx);
        // both sides are the same exact rational rounded once
        CHECK(lhs == rhs);
    }
}

TEST_CASE("depth-1 interpolation is the shifted single sum") {
    PrecisionContext ctx;
    Complex s = cval(0.5, 1.0, ctx.bits);
    Complex direct = mzf_complex({cval(2.5, 1.0, ctx.bits)}, 50, ctx);
    Complex interp = interp_truncated(Index{2}, s, 50, ctx);
    CHECK(oracles::close_abs(interp, direct, 110));
}

TEST_CASE("interpolation at s=0 collapses to the truncated zeta value") {
    PrecisionContext ctx;
    Complex zero(ctx.bits);
    Complex v = interp_truncated(Index{1, 2}, zero, 100, ctx);
    Real z = zeta_truncated(Index{1, 2}, 100, ctx);
    CHECK(v.im().is_zero());
    Real budget = rounding_budget(ctx.bits, abs(v));
    CHECK(abs(v.re() - z) <= budget);
}

TEST_CASE("factorized evaluator equals the displacement-coordinate oracle") {
    PrecisionContext ctx;
    struct Case {
        Index k;
        double re, im;
        long N;
    };
    const Case cases[] = {
        {Index{2}, 7.0, 3.0, 25},
        {Index{1, 2}, 0.5, 0.0, 60},
        {Index{1, 1, 2}, 1.0, 1.0, 40},
        {Index{2, 3}, -0.5, 2.0, 40},
    };
    for (const Case& c : cases) {
        Complex s = cval(c.re, c.im, ctx.bits);
        Complex lhs = interp_truncated(c.k, s, c.N, ctx);
        Complex rhs = interp_mform(c.k, s, c.N, ctx);
        INFO("index " << c.k.str() << " N=" << c.N);
        CHECK(distance(lhs, rhs) <= rounding_budget(ctx.bits, abs(lhs)));
    }
}

TEST_CASE("integer interpolation equals the composition sum at finite N") {
    PrecisionContext ctx;
    struct Case {
        Index k;
        int m;
        long N;
    };
    const Case cases[] = {
        {Index{2}, 3, 100},
        {Index{1, 2}, 2, 200},
        {Index{1, 1, 2}, 1, 80},
    };
    for (const Case& c : cases) {
        Complex s(c.m, ctx.bits);
        Complex lhs = interp_truncated(c.k, s, c.N, ctx);
        Real rhs(ctx.bits);
        for (const Composition& e : compositions(c.k.depth(), c.m))
            rhs += zeta_truncated(shifted(c.k, e), c.N, ctx);
        INFO("index " << c.k.str() << " m=" << c.m);
        CHECK(abs(lhs.re() - rhs) <= rounding_budget(ctx.bits, abs(lhs)));
        CHECK(lhs.im().is_zero());
    }
}

TEST_CASE("conjugating s conjugates the value exactly") {
    PrecisionContext ctx;
    Complex s = cval(0.7, 1.3, ctx.bits);
    Complex a = interp_truncated(Index{1, 2}, s, 60, ctx);
    Complex b = interp_truncated(Index{1, 2}, conj(s), 60, ctx);
    CHECK(b.re() == a.re());
    CHECK(b.im() == -a.im());
}

TEST_CASE("pivot partials alternate in sign for real s") {
    PrecisionContext ctx;
    Complex s = cval(0.5, 0.0, ctx.bits);
    auto partials = interp_pivot_partials(Index{1, 1, 2}, s, 50, ctx);
    REQUIRE(partials.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(partials[i].im().is_zero());
        CHECK(partials[i].re().sign() == (i % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("interpolation domain and capability guards") {
    PrecisionContext ctx;
    CHECK_THROWS_AS(interp_truncated(Index{2, 1}, cval(0, 0, ctx.bits), 50, ctx), domain_error);
    CHECK_THROWS_AS(interp_truncated(Index{1, 2}, cval(-0.96, 0, ctx.bits), 50, ctx),
                    domain_error);
    CHECK_THROWS_AS(interp_truncated(Index{1, 2}, cval(-0.95, 0, ctx.bits), 50, ctx),
                    domain_error);
    CHECK_THROWS_AS(interp_truncated(Index{1, 2}, cval(0, 0, ctx.bits), 1, ctx), invalid_input);
    CHECK_THROWS_AS(interp_mform(Index{1, 1, 1, 2}, cval(0, 0, ctx.bits), 50, ctx),
                    capability_error);
    CHECK_THROWS_AS(interp_mform(Index{1, 2}, cval(0, 0, ctx.bits), 300, ctx), capability_error);
}

TEST_CASE("adaptive interpolation evaluates I_(1,2)(0) near zeta(3)") {
    PrecisionContext ctx = PrecisionContext::with_terms(512);
    Evaluation ev = interp_eval(Index{1, 2}, cval(0, 0, ctx.bits), ctx);
    Real ref = oracles::zeta_ref_ui(3, ctx.bits);
    Real diff = abs(ev.value.re() - ref);
    CHECK(diff <= ev.error_estimate);
    CHECK(ev.cancellation_ratio >= Real(1, ctx.bits));
    CHECK(ev.terms_used == 512);
}

TEST_CASE("adaptive interpolation reaches a loose epsilon at depth 1") {
    PrecisionContext ctx = PrecisionContext::with_eps(1e-6);
    Evaluation ev = interp_eval(Index{2}, cval(1, 0, ctx.bits), ctx);
    Real ref = oracles::zeta_ref_ui(3, ctx.bits);
    CHECK(ev.error_estimate.leq_d(1e-6));
    Real diff = abs(ev.value.re() - ref);
    CHECK(diff <= ev.error_estimate);
}

TEST_CASE("adaptive interpolation reports convergence failure at a tiny cap") {
    PrecisionContext ctx = PrecisionContext::with_eps(1e-10);
    ctx.max_terms = 256;
    CHECK_THROWS_AS(interp_eval(Index{1, 2}, cval(-0.5, 2, ctx.bits), ctx), convergence_error);
}
