#ifndef SERJ_SIMULATION_HPP
#define SERJ_SIMULATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "serj/allocation.hpp"
#include "serj/model.hpp"
#include "serj/rng.hpp"
#include "serj/secrecy.hpp"

namespace serj {

/// Recipe for a random deployment: n nodes i.i.d. uniform on a side x side
/// square. The node nearest the origin corner becomes the source, the node
/// nearest the opposite corner the destination.
struct TopologySpec {
    int n_nodes = 2;
    double side = 5.0;
    std::uint64_t seed = 0;
};

NetworkTopology generate_topology(const TopologySpec& spec);

/// One Rayleigh fading realization: |h|^2 ~ Exponential(mean 1).
ChannelDraw draw_channel(RngStream& rng);

/// Empirical outage rates from repeated fading draws.
struct MonteCarloOutage {
    std::vector<double> per_link;
    double end_to_end = 0.0;
    std::uint64_t trials = 0;
};

/// Per trial, each hop draws an independent gain and evaluates the full
/// reliability metric (drawn gain in both the signal and the jamming-residue
/// terms); an outage is gamma_d < gamma_d_star. Trials use substreams keyed
/// by (seed, trial), so thread count does not affect the result.
MonteCarloOutage monte_carlo_outage(std::span<const Link> path,
                                    const PowerAllocation& allocation,
                                    const SystemParams& params, const SecrecyPlan& plan,
                                    std::uint64_t trials, std::uint64_t seed);

/// Variables a sweep can scan. The first four exist only as figure axes for
/// eavesdropper-side comparisons: they never enter the routing math, so the
/// power column stays constant across them.
enum class SweepParam {
    EavesdropperCount,         // n_e
    GuardRadius,               // r_min
    UncertaintyRadius,         // r_max
    EavesdropProbability,      // p_eav
    SourceDestinationDistance, // d_sd
    EavesdropperBits,          // b_e
    NodeCount,                 // n
};

const std::string& sweep_param_name(SweepParam param);
SweepParam sweep_param_from_name(const std::string& name); // throws config_error

struct SweepScenario {
    enum class Mode { SingleHop, MultiHop };

    SweepParam param = SweepParam::EavesdropperCount;
    std::vector<double> grid;
    Mode mode = Mode::SingleHop;
    double d_sd = 1.0;     // single-hop source-destination distance
    int n_nodes = 25;      // multi-hop node count (unless NodeCount is swept)
    double side = 5.0;     // multi-hop square side
    int realizations = 10; // multi-hop topologies averaged per grid point
    std::uint64_t seed = 0;
};

struct SweepRow {
    std::string swept_param;
    double value = 0.0;
    double p_total = 0.0; // aggregate (signal + jamming) power, averaged for multi-hop
    double hops = 0.0;    // path length, averaged for multi-hop
    int k_bits = 0;
    double beta = 0.0;
    double eta = 0.0;
    double wall_ms = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// One row per grid point, ascending in the swept value. Multi-hop rows
/// average over `realizations` seeded topologies; the per-realization seeds
/// do not depend on the grid index, so rows over inert variables reuse the
/// exact same deployments.
SweepResult run_sweep(const SweepScenario& scenario, const SystemParams& params);

/// Worker threads to use: hardware concurrency, capped by SERJ_THREADS.
int thread_budget();

} // namespace serj

#endif
