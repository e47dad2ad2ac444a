#ifndef SERJ_RELIABILITY_HPP
#define SERJ_RELIABILITY_HPP

#include <span>

#include "serj/model.hpp"
#include "serj/secrecy.hpp"

namespace serj {

/// The outage budget folded into a single path-independent constant: a power
/// allocation over a path is feasible iff sum(d_i^alpha / P_i) <= eta.
struct ReliabilityBudget {
    double eta = 0.0;
    double epsilon = 0.0;
};

/// Reliability constant
///   eta = ln(1/(1-epsilon)) * (1 - (gamma_d_star-1)*theta^2*beta)
///         / ((gamma_d_star-1) * (sigma_d_sq + delta_d_sq/12)).
/// Throws reliability_infeasible_error when the plan's jamming residue makes
/// the margin non-positive.
double eta(const SystemParams& params, const SecrecyPlan& plan);

ReliabilityBudget reliability_budget(const SystemParams& params, const SecrecyPlan& plan);

/// Rayleigh outage probability of one hop at transmit power p_s:
///   1 - exp(-(gamma_d_star-1) * noise * d^alpha / (p_s * margin)).
/// Returns exactly 1 when the plan is not reliability-feasible.
double link_outage_probability(double p_s, double distance, const SystemParams& params,
                               const SecrecyPlan& plan);

/// 1 - prod(1 - p_i) over independent hops.
double end_to_end_outage(std::span<const double> per_link);

} // namespace serj

#endif
