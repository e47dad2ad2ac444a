#include <cmath>
#include <numbers>

#include <doctest.h>

#include "serj/errors.hpp"
#include "serj/secrecy.hpp"
#include "support.hpp"

using namespace serj;

TEST_CASE("min_key_bits reference values") {
    SystemParams p;
    CHECK(min_key_bits(p) == 13);
    p.b_e = 8;
    CHECK(min_key_bits(p) == 7);
    p.b_e = 4;
    CHECK(min_key_bits(p) == 3);

    p = SystemParams{};
    p.gamma_e_star = gamma_e_star_floor(); // denominator hits zero
    CHECK_THROWS_AS(min_key_bits(p), secrecy_infeasible_error);
}

TEST_CASE("min_key_bits agrees with the metric scan") {
    RngStream rng(23);
    for (int i = 0; i < 400; ++i) {
        SystemParams p;
        p.b_e = 1 + static_cast<int>(rng.next_u64() % 20);
        p.l = std::exp(2.0 * (rng.next_uniform() - 0.5)); // ~ [0.37, 1.65]
        p.gamma_e_star = gamma_e_star_floor() + 0.5 + 200.0 * rng.next_uniform();
        const int k = min_key_bits(p);
        CHECK(k == testing::scan_min_key_bits(p));
        CHECK(gamma_e_worst_case(k, p) < p.gamma_e_star);
        if (k > 0) CHECK(gamma_e_worst_case(k - 1, p) >= p.gamma_e_star);
    }
}

TEST_CASE("min_key_bits monotonicity") {
    SystemParams p;
    for (int b = 1; b < 20; ++b) {
        SystemParams lo = p;
        lo.b_e = b;
        SystemParams hi = p;
        hi.b_e = b + 1;
        CHECK(min_key_bits(hi) >= min_key_bits(lo));
    }
    SystemParams loose = p;
    loose.gamma_e_star = 300.0;
    CHECK(min_key_bits(loose) <= min_key_bits(p));
    SystemParams big_l = p;
    big_l.l = 4.0;
    CHECK(min_key_bits(big_l) <= min_key_bits(p));
}

TEST_CASE("min_key_bits caps absurd key lengths") {
    SystemParams p;
    p.l = 1e-11; // pushes the requirement past b_e + 32
    CHECK_THROWS_AS(min_key_bits(p), secrecy_infeasible_error);
}

TEST_CASE("jamming_ratio") {
    CHECK(jamming_ratio(0, 1.0) == 0.0);
    CHECK(jamming_ratio(0, 3.7) == 0.0);
    CHECK(jamming_ratio(1, 1.0) == 2.0);
    CHECK(jamming_ratio(13, 1.0) == 89462102.0); // exact in double
    CHECK_THROWS_AS(jamming_ratio(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(jamming_ratio(1, 0.0), std::domain_error);

    // quadrupling per extra key bit, from above
    double previous_ratio = jamming_ratio(2, 1.0) / jamming_ratio(1, 1.0);
    for (int k = 2; k < 24; ++k) {
        const double ratio = jamming_ratio(k + 1, 1.0) / jamming_ratio(k, 1.0);
        CHECK(ratio > 4.0);
        CHECK(ratio < previous_ratio);
        previous_ratio = ratio;
    }
    CHECK(jamming_ratio(21, 1.0) / jamming_ratio(20, 1.0) ==
          doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("build_secrecy_plan") {
    SystemParams p;
    const SecrecyPlan plan = build_secrecy_plan(p);
    CHECK(plan.k_bits == 13);
    CHECK(plan.beta == 89462102.0);
    CHECK(plan.gamma_e_achieved ==
          doctest::Approx((13.0 / 12.0) * 2.0 * std::numbers::pi * std::numbers::e)
              .epsilon(1e-12));
    CHECK(plan.gamma_e_achieved < p.gamma_e_star);
    CHECK(plan.beta == jamming_ratio(plan.k_bits, p.l));

    // no jamming needed when the threshold is loose enough
    SystemParams loose;
    loose.b_e = 1;
    loose.gamma_e_star = 20.0; // above pi*e*2/(2*1) + pi*e/6
    const SecrecyPlan trivial = build_secrecy_plan(loose);
    CHECK(trivial.k_bits == 0);
    CHECK(trivial.beta == 0.0);
}

TEST_CASE("plan is identical for every transmitter") {
    SystemParams p;
    const SecrecyPlan a = build_secrecy_plan(p);
    const SecrecyPlan b = build_secrecy_plan(p);
    CHECK(a.k_bits == b.k_bits);
    CHECK(a.beta == b.beta);
    CHECK(a.gamma_e_achieved == b.gamma_e_achieved);
}

TEST_CASE("k_bits zero iff beta zero") {
    RngStream rng(29);
    for (int i = 0; i < 200; ++i) {
        SystemParams p;
        p.b_e = 1 + static_cast<int>(rng.next_u64() % 16);
        p.gamma_e_star = gamma_e_star_floor() + 0.5 + 500.0 * rng.next_uniform();
        const SecrecyPlan plan = build_secrecy_plan(p);
        CHECK((plan.k_bits == 0) == (plan.beta == 0.0));
    }
}

TEST_CASE("reliability_feasible") {
    SystemParams p;
    const SecrecyPlan plan = build_secrecy_plan(p);

    SystemParams no_error = p;
    no_error.theta = 0.0;
    CHECK(reliability_feasible(plan, no_error));

    CHECK(reliability_feasible(plan, p)); // margin = 1 - 3.668e-3

    SystemParams coarse = p;
    coarse.theta = 1e-3;
    CHECK_FALSE(reliability_feasible(plan, coarse));
}
