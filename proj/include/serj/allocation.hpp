#ifndef SERJ_ALLOCATION_HPP
#define SERJ_ALLOCATION_HPP

#include <span>
#include <vector>

#include "serj/model.hpp"
#include "serj/reliability.hpp"
#include "serj/secrecy.hpp"

namespace serj {

/// Per-hop transmit and jamming powers for a concrete path, with the
/// aggregate cost. The reliability constraint sum(d_i^alpha / P_i) = eta
/// binds with equality; jamming_powers[i] = beta * transmit_powers[i].
struct PowerAllocation {
    std::vector<Link> links;
    std::vector<double> transmit_powers;
    std::vector<double> jamming_powers;
    double total_cost = 0.0;
};

/// Lagrange-optimal transmit powers for a given path:
///   P_i = (1/eta) * d_i^(alpha/2) * sum_k d_k^(alpha/2).
/// Minimizes total power subject to the binding reliability constraint.
PowerAllocation optimal_power_allocation(std::span<const Link> path,
                                         const ReliabilityBudget& budget,
                                         const SecrecyPlan& plan,
                                         const SystemParams& params);

/// Closed-form minimum total (signal + jamming) cost of a path:
///   (1 + beta) / eta * (sum_k d_k^(alpha/2))^2.
double path_total_cost(std::span<const Link> path, const ReliabilityBudget& budget,
                       const SecrecyPlan& plan, const SystemParams& params);

} // namespace serj

#endif
