// Test-only oracles, kept independent of the implementation paths they check.
#ifndef SERJ_TESTS_SUPPORT_HPP
#define SERJ_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "serj/model.hpp"
#include "serj/rng.hpp"

namespace serj::testing {

/// Eavesdropper metric for a concrete link state (power, gain, distance,
/// noise). The production code only ever evaluates the collapsed worst case;
/// this general form verifies that the collapse is real.
inline double gamma_e_general(double p_s, double gain_sq, double distance, int k_bits,
                              double sigma_e_sq, const SystemParams& params) {
    const double received = p_s * gain_sq / std::pow(distance, params.alpha);
    const double span_sq = std::exp2(2.0 * (params.b_e - k_bits));
    const double four_l_sq = 4.0 * params.l * params.l;
    const double numerator = received * (1.0 + four_l_sq / (12.0 * span_sq)) + sigma_e_sq;
    const double denominator =
        received * four_l_sq / (2.0 * std::numbers::pi * std::numbers::e * span_sq) +
        sigma_e_sq;
    return numerator / denominator;
}

/// Smallest k with gamma_e_worst_case(k) < gamma_e_star, by linear scan.
inline int scan_min_key_bits(const SystemParams& params, int limit = 4096) {
    for (int k = 0; k <= limit; ++k) {
        if (gamma_e_worst_case(k, params) < params.gamma_e_star) return k;
    }
    return -1;
}

/// Exhaustive minimum over all simple source-destination paths of
/// sum(d^(alpha/2)). Exponential; for small n only.
inline double enumerate_min_path_weight(const NetworkTopology& topo, double alpha) {
    const int n = static_cast<int>(topo.nodes.size());
    std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const double d = std::hypot(topo.nodes[a].x - topo.nodes[b].x,
                                        topo.nodes[a].y - topo.nodes[b].y);
            weight[a][b] = std::pow(d, 0.5 * alpha);
        }
    }
    int src = -1;
    int dst = -1;
    for (int i = 0; i < n; ++i) {
        if (topo.nodes[i].id == topo.source) src = i;
        if (topo.nodes[i].id == topo.destination) dst = i;
    }

    double best = std::numeric_limits<double>::infinity();
    auto dfs = [&](auto&& self, int u, std::uint32_t visited, double acc) -> void {
        if (u == dst) {
            best = std::min(best, acc);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (visited & (1u << v)) continue;
            const double next = acc + weight[u][v];
            if (next >= best) continue;
            self(self, v, visited | (1u << v), next);
        }
    };
    dfs(dfs, src, 1u << src, 0.0);
    return best;
}

/// Random allocation satisfying sum(c_i / P_i) = budget exactly: random
/// positive powers, then one global scale to land on the constraint.
inline std::vector<double> random_feasible_powers(const std::vector<double>& c,
                                                  double budget, RngStream& rng) {
    std::vector<double> powers(c.size());
    double used = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        powers[i] = c[i] * std::exp(4.0 * (rng.next_uniform() - 0.5));
        used += c[i] / powers[i];
    }
    const double scale = used / budget;
    for (auto& p : powers) p *= scale;
    return powers;
}

/// Derivative-free constrained minimizer for
///   min sum(P_i)  s.t.  sum(c_i / P_i) = budget, P_i > 0.
/// The last power is eliminated through the constraint; Nelder-Mead runs on
/// the remaining log-powers with a few restarts.
inline double numeric_min_transmit_cost(const std::vector<double>& c, double budget) {
    const std::size_t hops = c.size();
    if (hops == 1) return c[0] / budget; // the constraint pins the only power

    const std::size_t dim = hops - 1;
    auto objective = [&](const std::vector<double>& x) {
        double total = 0.0;
        double used = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = std::exp(x[i]);
            total += p;
            used += c[i] / p;
        }
        if (!(used < budget)) return 1e300 * (1.0 + used - budget);
        return total + c[dim] / (budget - used);
    };

    // Feasible start: each eliminated hop consumes budget/(2*hops).
    std::vector<double> best(dim);
    for (std::size_t i = 0; i < dim; ++i)
        best[i] = std::log(c[i] * 2.0 * static_cast<double>(hops) / budget);
    double best_value = objective(best);

    double step = 0.5;
    for (int round = 0; round < 4; ++round) {
        std::vector<std::vector<double>> simplex(dim + 1, best);
        std::vector<double> values(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
        for (std::size_t i = 0; i <= dim; ++i) values[i] = objective(simplex[i]);

        for (int iter = 0; iter < 4000; ++iter) {
            std::vector<std::size_t> order(dim + 1);
            for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            const std::size_t lo = order[0];
            const std::size_t hi = order[dim];
            const std::size_t second_hi = order[dim - 1];
            if (values[hi] - values[lo] < 1e-14 * (std::abs(values[lo]) + 1e-300)) break;

            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i <= dim; ++i) {
                if (i == hi) continue;
                for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
            }
            for (double& v : centroid) v /= static_cast<double>(dim);

            auto blend = [&](double t) {
                std::vector<double> x(dim);
                for (std::size_t d = 0; d < dim; ++d)
                    x[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
                return x;
            };

            const auto reflected = blend(-1.0);
            const double f_reflected = objective(reflected);
            if (f_reflected < values[lo]) {
                const auto expanded = blend(-2.0);
                const double f_expanded = objective(expanded);
                if (f_expanded < f_reflected) {
                    simplex[hi] = expanded;
                    values[hi] = f_expanded;
                } else {
                    simplex[hi] = reflected;
                    values[hi] = f_reflected;
                }
                continue;
            }
            if (f_reflected < values[second_hi]) {
                simplex[hi] = reflected;
                values[hi] = f_reflected;
                continue;
            }
            const auto contracted = blend(0.5);
            const double f_contracted = objective(contracted);
            if (f_contracted < values[hi]) {
                simplex[hi] = contracted;
                values[hi] = f_contracted;
                continue;
            }
            for (std::size_t i = 0; i <= dim; ++i) {
                if (i == lo) continue;
                for (std::size_t d = 0; d < dim; ++d)
                    simplex[i][d] = simplex[lo][d] + 0.5 * (simplex[i][d] - simplex[lo][d]);
                values[i] = objective(simplex[i]);
            }
        }

        for (std::size_t i = 0; i <= dim; ++i) {
            if (values[i] < best_value) {
                best_value = values[i];
                best = simplex[i];
            }
        }
        step *= 0.05;
    }
    return best_value;
}

} // namespace serj::testing

#endif
