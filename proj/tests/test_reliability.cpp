#include <cmath>

#include <doctest.h>

#include "serj/allocation.hpp"
#include "serj/errors.hpp"
#include "serj/reliability.hpp"
#include "support.hpp"

using namespace serj;

namespace {

SecrecyPlan reference_plan() { return build_secrecy_plan(SystemParams{}); }

} // namespace

TEST_CASE("eta reference values") {
    // every factor collapses to 1
    SystemParams unit;
    unit.gamma_d_star = 2.0;
    unit.theta = 0.0;
    unit.epsilon = 1.0 - std::exp(-1.0);
    SecrecyPlan no_jamming{0, 0.0, gamma_e_worst_case(0, unit)};
    CHECK(eta(unit, no_jamming) == doctest::Approx(1.0).epsilon(1e-12));

    SystemParams p;
    const SecrecyPlan plan = reference_plan();
    CHECK(eta(p, plan) == doctest::Approx(2.5603e-3).epsilon(4e-5));
    CHECK(std::abs(eta(p, plan) - 2.5603e-3) <= 1e-7);

    SystemParams exact = p;
    exact.theta = 0.0;
    CHECK(std::abs(eta(exact, plan) - 2.5698e-3) <= 1e-7);

    SystemParams coarse = p;
    coarse.theta = 1e-3;
    CHECK_THROWS_AS(eta(coarse, plan), reliability_infeasible_error);
    CHECK_THROWS_AS(reliability_budget(coarse, plan), reliability_infeasible_error);
}

TEST_CASE("eta scaling") {
    SystemParams p;
    p.theta = 0.0;
    const SecrecyPlan plan = reference_plan();
    const double base = eta(p, plan);

    SystemParams tighter = p;
    tighter.epsilon = 0.01;
    CHECK(eta(tighter, plan) / base ==
          doctest::Approx(std::log(1.0 / 0.99) / std::log(1.0 / 0.9)).epsilon(1e-12));

    SystemParams harder = p;
    harder.gamma_d_star = 83.0; // gamma* - 1 doubles
    CHECK(eta(harder, plan) == doctest::Approx(base / 2.0).epsilon(1e-12));
}

TEST_CASE("link_outage_probability") {
    SystemParams p;
    const SecrecyPlan plan = reference_plan();

    CHECK(link_outage_probability(1e30, 1.0, p, plan) < 1e-20);
    CHECK(link_outage_probability(1e30, 1.0, p, plan) > 0.0);

    // power tuned so the exponent is ln 2
    const double margin = 1.0 - (p.gamma_d_star - 1.0) * p.theta * p.theta * plan.beta;
    const double half_power =
        (p.gamma_d_star - 1.0) * p.effective_noise() / (margin * std::log(2.0));
    CHECK(link_outage_probability(half_power, 1.0, p, plan) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // single-hop optimal power lands exactly on the budget
    const double optimal = 1.0 / eta(p, plan);
    CHECK(optimal == doctest::Approx(390.58).epsilon(5e-5));
    CHECK(std::abs(link_outage_probability(optimal, 1.0, p, plan) - 0.1) <= 1e-12);

    CHECK_THROWS_AS(link_outage_probability(0.0, 1.0, p, plan), std::domain_error);
    CHECK_THROWS_AS(link_outage_probability(10.0, 0.0, p, plan), std::domain_error);

    SystemParams coarse = p;
    coarse.theta = 1e-3; // infeasible: outage saturates
    CHECK(link_outage_probability(1e12, 1.0, coarse, plan) == 1.0);
}

TEST_CASE("link_outage_probability monotonicity") {
    SystemParams p;
    const SecrecyPlan plan = reference_plan();
    RngStream rng(31);
    for (int i = 0; i < 200; ++i) {
        const double power = 1e3 + 1e6 * rng.next_uniform();
        const double d = 0.2 + 3.0 * rng.next_uniform();
        const double base = link_outage_probability(power, d, p, plan);
        CHECK(base > 0.0);
        CHECK(base < 1.0);
        CHECK(link_outage_probability(power * 2.0, d, p, plan) < base);
        CHECK(link_outage_probability(power, d * 1.5, p, plan) > base);
    }
}

TEST_CASE("end_to_end_outage") {
    CHECK(end_to_end_outage(std::vector<double>{0.1}) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(end_to_end_outage(std::vector<double>{0.5, 0.5}) == 0.75);
    CHECK(end_to_end_outage(std::vector<double>{0.0513, 0.0513}) ==
          doctest::Approx(0.1).epsilon(1e-2));
    CHECK_THROWS_AS(end_to_end_outage(std::vector<double>{}), std::domain_error);
    CHECK_THROWS_AS(end_to_end_outage(std::vector<double>{1.2}), std::domain_error);

    // strictly increasing in extra lossy hops
    std::vector<double> probs{0.05};
    double previous = end_to_end_outage(probs);
    for (int i = 0; i < 5; ++i) {
        probs.push_back(0.01 * (i + 1));
        const double widened = end_to_end_outage(probs);
        CHECK(widened > previous);
        previous = widened;
    }
}

TEST_CASE("optimal allocation binds the outage budget") {
    SystemParams p;
    const SecrecyPlan plan = reference_plan();
    const ReliabilityBudget budget = reliability_budget(p, plan);

    RngStream rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const int hops = 1 + static_cast<int>(rng.next_u64() % 4);
        std::vector<Link> path;
        for (int i = 0; i < hops; ++i)
            path.push_back(Link{"a" + std::to_string(i), "a" + std::to_string(i + 1),
                                0.3 + 2.5 * rng.next_uniform()});
        const PowerAllocation alloc = optimal_power_allocation(path, budget, plan, p);
        std::vector<double> outages;
        for (int i = 0; i < hops; ++i)
            outages.push_back(link_outage_probability(alloc.transmit_powers[i],
                                                      path[i].distance, p, plan));
        CHECK(end_to_end_outage(outages) == doctest::Approx(p.epsilon).epsilon(1e-9));
    }
}
