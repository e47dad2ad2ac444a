#include "serj/allocation.hpp"

#include <cmath>
#include <stdexcept>

#include "serj/errors.hpp"

namespace serj {

namespace {

void check_path(std::span<const Link> path, const ReliabilityBudget& budget) {
    if (path.empty()) throw std::domain_error("allocation: path must be non-empty");
    if (!(budget.eta > 0.0))
        throw reliability_infeasible_error("allocation: eta must be > 0");
    for (const auto& link : path) {
        if (!(link.distance > 0.0))
            throw std::domain_error("allocation: link distance must be > 0");
    }
}

double weight_sum(std::span<const Link> path, double alpha) {
    double sum = 0.0;
    for (const auto& link : path) sum += std::pow(link.distance, 0.5 * alpha);
    return sum;
}

} // namespace

PowerAllocation optimal_power_allocation(std::span<const Link> path,
                                         const ReliabilityBudget& budget,
                                         const SecrecyPlan& plan,
                                         const SystemParams& params) {
    check_path(path, budget);

    const double total_weight = weight_sum(path, params.alpha);

    PowerAllocation alloc;
    alloc.links.assign(path.begin(), path.end());
    alloc.transmit_powers.reserve(path.size());
    alloc.jamming_powers.reserve(path.size());
    alloc.total_cost = 0.0;
    for (const auto& link : path) {
        const double p_s =
            std::pow(link.distance, 0.5 * params.alpha) * total_weight / budget.eta;
        const double p_j = plan.beta * p_s;
        alloc.transmit_powers.push_back(p_s);
        alloc.jamming_powers.push_back(p_j);
        alloc.total_cost += p_s + p_j;
    }
    return alloc;
}

double path_total_cost(std::span<const Link> path, const ReliabilityBudget& budget,
                       const SecrecyPlan& plan, const SystemParams& params) {
    check_path(path, budget);
    const double total_weight = weight_sum(path, params.alpha);
    return (1.0 + plan.beta) / budget.eta * total_weight * total_weight;
}

} // namespace serj
