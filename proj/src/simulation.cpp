#include "serj/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "serj/errors.hpp"
#include "serj/reliability.hpp"
#include "serj/routing.hpp"

namespace serj {

NetworkTopology generate_topology(const TopologySpec& spec) {
    if (spec.n_nodes < 2)
        throw std::domain_error("generate_topology: n_nodes must be >= 2");
    if (!(spec.side > 0.0))
        throw std::domain_error("generate_topology: side must be > 0");

    RngStream rng(spec.seed);
    NetworkTopology topo;
    topo.nodes.reserve(spec.n_nodes);
    std::set<std::pair<double, double>> taken;
    for (int i = 0; i < spec.n_nodes; ++i) {
        double x = 0.0;
        double y = 0.0;
        do {
            x = spec.side * rng.next_uniform();
            y = spec.side * rng.next_uniform();
        } while (!taken.emplace(x, y).second);
        topo.nodes.push_back(Node{"n" + std::to_string(i), x, y});
    }

    auto nearest = [&](double cx, double cy, int exclude) {
        int best = -1;
        double best_d = 0.0;
        for (int i = 0; i < spec.n_nodes; ++i) {
            if (i == exclude) continue;
            const double dx = topo.nodes[i].x - cx;
            const double dy = topo.nodes[i].y - cy;
            const double d = dx * dx + dy * dy;
            if (best < 0 || d < best_d) {
                best = i;
                best_d = d;
            }
        }
        return best;
    };
    const int src = nearest(0.0, 0.0, -1);
    const int dst = nearest(spec.side, spec.side, src);
    topo.source = topo.nodes[src].id;
    topo.destination = topo.nodes[dst].id;
    return topo;
}

ChannelDraw draw_channel(RngStream& rng) { return ChannelDraw{rng.next_exponential()}; }

int thread_budget() {
    int budget = static_cast<int>(std::thread::hardware_concurrency());
    if (budget < 1) budget = 1;
    if (const char* cap = std::getenv("SERJ_THREADS")) {
        const int parsed = std::atoi(cap);
        if (parsed >= 1) budget = std::min(budget, parsed);
    }
    return budget;
}

MonteCarloOutage monte_carlo_outage(std::span<const Link> path,
                                    const PowerAllocation& allocation,
                                    const SystemParams& params,
                                    [[maybe_unused]] const SecrecyPlan& plan,
                                    std::uint64_t trials, std::uint64_t seed) {
    // plan is part of the call contract; the jamming it implies is already
    // folded into allocation.jamming_powers.
    if (trials < 1) throw std::domain_error("monte_carlo_outage: trials must be >= 1");
    if (path.empty()) throw std::domain_error("monte_carlo_outage: path must be non-empty");
    if (allocation.transmit_powers.size() != path.size() ||
        allocation.jamming_powers.size() != path.size())
        throw std::domain_error("monte_carlo_outage: allocation does not match path");

    const std::size_t hops = path.size();

    // Outage counts are integers, so summing per-chunk tallies in chunk order
    // reproduces the serial result for any thread count.
    auto run_chunk = [&](std::uint64_t begin, std::uint64_t end,
                         std::vector<std::uint64_t>& link_counts,
                         std::uint64_t& e2e_count) {
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            RngStream rng = RngStream::substream(seed, trial);
            bool any = false;
            for (std::size_t i = 0; i < hops; ++i) {
                const double gain_sq = draw_channel(rng).gain_sq;
                const double metric =
                    gamma_d(allocation.transmit_powers[i], allocation.jamming_powers[i],
                            gain_sq, path[i].distance, params);
                if (metric < params.gamma_d_star) {
                    ++link_counts[i];
                    any = true;
                }
            }
            if (any) ++e2e_count;
        }
    };

    const int workers =
        static_cast<int>(std::min<std::uint64_t>(trials, thread_budget()));
    std::vector<std::vector<std::uint64_t>> link_counts(
        workers, std::vector<std::uint64_t>(hops, 0));
    std::vector<std::uint64_t> e2e_counts(workers, 0);

    if (workers == 1) {
        run_chunk(0, trials, link_counts[0], e2e_counts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = chunk * w;
            const std::uint64_t end = std::min(trials, begin + chunk);
            pool.emplace_back(run_chunk, begin, end, std::ref(link_counts[w]),
                              std::ref(e2e_counts[w]));
        }
        for (auto& t : pool) t.join();
    }

    MonteCarloOutage result;
    result.trials = trials;
    result.per_link.assign(hops, 0.0);
    std::uint64_t e2e = 0;
    for (int w = 0; w < workers; ++w) {
        e2e += e2e_counts[w];
        for (std::size_t i = 0; i < hops; ++i)
            result.per_link[i] += static_cast<double>(link_counts[w][i]);
    }
    for (std::size_t i = 0; i < hops; ++i)
        result.per_link[i] /= static_cast<double>(trials);
    result.end_to_end = static_cast<double>(e2e) / static_cast<double>(trials);
    return result;
}

namespace {

const std::string kSweepNames[] = {"n_e", "r_min", "r_max", "p_eav", "d_sd", "b_e", "n"};

bool is_integral_value(double v) { return std::isfinite(v) && v == std::floor(v); }

void validate_scenario(const SweepScenario& sc) {
    if (sc.grid.empty()) throw config_error("sweep", "empty grid");
    for (double v : sc.grid) {
        if (!std::isfinite(v)) throw config_error("sweep", "grid values must be finite");
    }
    switch (sc.param) {
    case SweepParam::SourceDestinationDistance:
        if (sc.mode != SweepScenario::Mode::SingleHop)
            throw config_error("sweep", "d_sd can only be swept in single_hop mode");
        for (double v : sc.grid)
            if (!(v > 0.0)) throw config_error("sweep", "d_sd values must be > 0");
        break;
    case SweepParam::NodeCount:
        if (sc.mode != SweepScenario::Mode::MultiHop)
            throw config_error("sweep", "n can only be swept in multi_hop mode");
        for (double v : sc.grid)
            if (!is_integral_value(v) || v < 2.0)
                throw config_error("sweep", "n values must be integers >= 2");
        break;
    case SweepParam::EavesdropperBits:
        for (double v : sc.grid)
            if (!is_integral_value(v) || v < 1.0)
                throw config_error("sweep", "b_e values must be integers >= 1");
        break;
    default:
        break;
    }
    if (sc.mode == SweepScenario::Mode::SingleHop) {
        if (!(sc.d_sd > 0.0)) throw config_error("scenario", "d_sd must be > 0");
    } else {
        if (sc.n_nodes < 2) throw config_error("scenario", "n_nodes must be >= 2");
        if (!(sc.side > 0.0)) throw config_error("scenario", "side must be > 0");
        if (sc.realizations < 1) throw config_error("scenario", "realizations must be >= 1");
    }
}

} // namespace

const std::string& sweep_param_name(SweepParam param) {
    return kSweepNames[static_cast<int>(param)];
}

SweepParam sweep_param_from_name(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kSweepNames)); ++i) {
        if (kSweepNames[i] == name) return static_cast<SweepParam>(i);
    }
    throw config_error("sweep", "unknown swept variable '" + name + "'");
}

SweepResult run_sweep(const SweepScenario& scenario, const SystemParams& params) {
    validate_scenario(scenario);

    std::vector<double> grid = scenario.grid;
    std::sort(grid.begin(), grid.end());

    SweepResult result;
    result.rows.reserve(grid.size());
    for (double value : grid) {
        const auto start = std::chrono::steady_clock::now();

        SystemParams p = params;
        if (scenario.param == SweepParam::EavesdropperBits)
            p.b_e = static_cast<int>(value);

        const SecrecyPlan plan = build_secrecy_plan(p);
        const double budget_eta = eta(p, plan);

        double total_power = 0.0;
        double total_hops = 0.0;
        if (scenario.mode == SweepScenario::Mode::SingleHop) {
            const double d = scenario.param == SweepParam::SourceDestinationDistance
                                 ? value
                                 : scenario.d_sd;
            NetworkTopology topo;
            topo.nodes = {Node{"S", 0.0, 0.0}, Node{"D", d, 0.0}};
            topo.source = "S";
            topo.destination = "D";
            const RouteResult route = serj_route(topo, p);
            total_power = route.allocation.total_cost;
            total_hops = static_cast<double>(route.path.size());
        } else {
            const int n = scenario.param == SweepParam::NodeCount
                              ? static_cast<int>(value)
                              : scenario.n_nodes;
            for (int r = 0; r < scenario.realizations; ++r) {
                TopologySpec spec{n, scenario.side, derive_seed(scenario.seed, r)};
                const RouteResult route = serj_route(generate_topology(spec), p);
                total_power += route.allocation.total_cost;
                total_hops += static_cast<double>(route.path.size());
            }
            total_power /= scenario.realizations;
            total_hops /= scenario.realizations;
        }

        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        result.rows.push_back(SweepRow{sweep_param_name(scenario.param), value,
                                       total_power, total_hops, plan.k_bits, plan.beta,
                                       budget_eta, wall_ms});
    }
    return result;
}

} // namespace serj
