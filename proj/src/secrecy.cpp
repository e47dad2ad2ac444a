#include "serj/secrecy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "serj/errors.hpp"

namespace serj {

int min_key_bits(const SystemParams& params) {
    if (!(params.l > 0.0)) throw std::domain_error("min_key_bits: l must be > 0");
    const double floor = gamma_e_star_floor();
    if (!(params.gamma_e_star > floor))
        throw secrecy_infeasible_error(
            "min_key_bits: gamma_e_star <= pi*e/6; no key length can enforce secrecy");

    // Far past b_e the converter model stops meaning anything; treat such
    // configurations as infeasible rather than returning an absurd k.
    const int cap = params.b_e + 32;

    // Closed form in log space (avoids overflow for large b_e):
    // k > 0.5 * log2(pi*e * 2^(2*b_e - 1) / (l^2 * (gamma_e_star - pi*e/6)))
    const double bound =
        0.5 * (std::log2(std::numbers::pi * std::numbers::e) + (2.0 * params.b_e - 1.0) -
               2.0 * std::log2(params.l) - std::log2(params.gamma_e_star - floor));
    if (bound > static_cast<double>(cap))
        throw secrecy_infeasible_error("min_key_bits: required key length exceeds b_e + 32");

    int k = bound < 0.0 ? 0 : static_cast<int>(std::ceil(bound));

    // The ceiling can sit one off at boundary values; the metric inequality
    // is what actually matters, so settle it directly.
    while (k <= cap && !(gamma_e_worst_case(k, params) < params.gamma_e_star)) ++k;
    if (k > cap)
        throw secrecy_infeasible_error("min_key_bits: required key length exceeds b_e + 32");
    while (k > 0 && gamma_e_worst_case(k - 1, params) < params.gamma_e_star) --k;
    return k;
}

double jamming_ratio(int k_bits, double l) {
    if (k_bits < 0) throw std::domain_error("jamming_ratio: k_bits must be >= 0");
    if (!(l > 0.0)) throw std::domain_error("jamming_ratio: l must be > 0");
    const double levels = std::exp2(static_cast<double>(k_bits));
    return 2.0 * l * l * (2.0 * levels * levels - 3.0 * levels + 1.0) / 3.0;
}

SecrecyPlan build_secrecy_plan(const SystemParams& params) {
    SecrecyPlan plan;
    plan.k_bits = min_key_bits(params);
    plan.beta = jamming_ratio(plan.k_bits, params.l);
    plan.gamma_e_achieved = gamma_e_worst_case(plan.k_bits, params);
    return plan;
}

bool reliability_feasible(const SecrecyPlan& plan, const SystemParams& params) {
    return 1.0 - (params.gamma_d_star - 1.0) * params.theta * params.theta * plan.beta > 0.0;
}

} // namespace serj
