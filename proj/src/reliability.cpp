#include "serj/reliability.hpp"

#include <cmath>
#include <stdexcept>

#include "serj/errors.hpp"

namespace serj {

namespace {

double jamming_margin(const SystemParams& params, const SecrecyPlan& plan) {
    return 1.0 - (params.gamma_d_star - 1.0) * params.theta * params.theta * plan.beta;
}

} // namespace

double eta(const SystemParams& params, const SecrecyPlan& plan) {
    const double margin = jamming_margin(params, plan);
    if (!(margin > 0.0))
        throw reliability_infeasible_error(
            "eta: jamming residue exceeds the reliability margin (theta^2 * beta too large)");
    return -std::log1p(-params.epsilon) * margin /
           ((params.gamma_d_star - 1.0) * params.effective_noise());
}

ReliabilityBudget reliability_budget(const SystemParams& params, const SecrecyPlan& plan) {
    return ReliabilityBudget{eta(params, plan), params.epsilon};
}

double link_outage_probability(double p_s, double distance, const SystemParams& params,
                               const SecrecyPlan& plan) {
    if (!(p_s > 0.0))
        throw std::domain_error("link_outage_probability: p_s must be > 0");
    if (!(distance > 0.0))
        throw std::domain_error("link_outage_probability: distance must be > 0");
    const double margin = jamming_margin(params, plan);
    if (!(margin > 0.0)) return 1.0;
    const double exponent = (params.gamma_d_star - 1.0) * params.effective_noise() *
                            std::pow(distance, params.alpha) / (p_s * margin);
    return -std::expm1(-exponent);
}

double end_to_end_outage(std::span<const double> per_link) {
    if (per_link.empty())
        throw std::domain_error("end_to_end_outage: need at least one hop");
    double survival = 1.0;
    for (double p : per_link) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("end_to_end_outage: probabilities must be in [0, 1]");
        survival *= 1.0 - p;
    }
    return 1.0 - survival;
}

} // namespace serj
