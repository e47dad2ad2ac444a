#include "serj/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "serj/errors.hpp"

namespace serj {

namespace {

constexpr double kPiE = std::numbers::pi * std::numbers::e;

void require(bool ok, const char* field, const char* message) {
    if (!ok) throw config_error(field, message);
}

} // namespace

double gamma_e_star_floor() { return kPiE / 6.0; }

void SystemParams::validate() const {
    require(std::isfinite(alpha) && alpha >= 2.0, "alpha", "must be >= 2");
    require(std::isfinite(theta) && theta >= 0.0, "theta", "must be >= 0");
    require(std::isfinite(sigma_d_sq) && sigma_d_sq > 0.0, "sigma_d_sq", "must be > 0");
    require(std::isfinite(delta_d_sq) && delta_d_sq >= 0.0, "delta_d_sq", "must be >= 0");
    require(b_d >= 1, "b_d", "must be an integer >= 1");
    require(b_e >= 1, "b_e", "must be an integer >= 1");
    require(std::isfinite(l) && l > 0.0, "l", "must be > 0");
    require(std::isfinite(gamma_d_star) && gamma_d_star > 1.0, "gamma_d_star", "must be > 1");
    require(std::isfinite(gamma_e_star) && gamma_e_star > gamma_e_star_floor(),
            "gamma_e_star", "must be > pi*e/6");
    require(std::isfinite(epsilon) && epsilon > 0.0 && epsilon < 1.0, "epsilon",
            "must be in (0, 1)");
}

void NetworkTopology::validate() const {
    require(nodes.size() >= 2, "nodes", "need at least two nodes");
    std::set<std::string_view> ids;
    for (const auto& n : nodes) {
        require(!n.id.empty(), "nodes", "node id must be non-empty");
        require(std::isfinite(n.x) && std::isfinite(n.y), "nodes",
                "node coordinates must be finite");
        require(ids.insert(n.id).second, "nodes", "duplicate node id");
    }
    require(!source.empty() && ids.count(source) == 1, "source", "not a node id");
    require(!destination.empty() && ids.count(destination) == 1, "destination",
            "not a node id");
    require(source != destination, "destination", "must differ from source");

    // Pairwise distances > 0 is equivalent to pairwise distinct coordinates.
    std::vector<std::pair<double, double>> coords;
    coords.reserve(nodes.size());
    for (const auto& n : nodes) coords.emplace_back(n.x, n.y);
    std::sort(coords.begin(), coords.end());
    require(std::adjacent_find(coords.begin(), coords.end()) == coords.end(),
            "nodes", "two nodes share the same coordinates");
}

const Node& NetworkTopology::node(std::string_view id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return n;
    }
    throw config_error("nodes", "unknown node id '" + std::string(id) + "'");
}

double path_loss_gain(double distance, double alpha, double gain_sq) {
    if (!(distance > 0.0)) throw std::domain_error("path_loss_gain: distance must be > 0");
    if (!(alpha >= 2.0)) throw std::domain_error("path_loss_gain: alpha must be >= 2");
    if (!(gain_sq >= 0.0)) throw std::domain_error("path_loss_gain: gain_sq must be >= 0");
    return gain_sq / std::pow(distance, alpha);
}

double adc_resolution_receiver(double p_s, double gain_sq, double distance,
                               const SystemParams& params) {
    if (!(p_s >= 0.0)) throw std::domain_error("adc_resolution_receiver: p_s must be >= 0");
    if (!(distance > 0.0))
        throw std::domain_error("adc_resolution_receiver: distance must be > 0");
    const double span = 2.0 * params.l * std::sqrt(p_s * gain_sq) /
                        std::pow(distance, 0.5 * params.alpha);
    return std::ldexp(span, -params.b_d);
}

double adc_resolution_eavesdropper(double p_s, double gain_sq, double distance,
                                   int k_bits, const SystemParams& params) {
    if (!(p_s >= 0.0))
        throw std::domain_error("adc_resolution_eavesdropper: p_s must be >= 0");
    if (!(distance > 0.0))
        throw std::domain_error("adc_resolution_eavesdropper: distance must be > 0");
    if (k_bits < 0)
        throw std::domain_error("adc_resolution_eavesdropper: k_bits must be >= 0");
    const double span = 2.0 * params.l * std::sqrt(p_s * gain_sq) /
                        std::pow(distance, 0.5 * params.alpha);
    // ldexp keeps the 2^k scaling law exact in floating point.
    return std::ldexp(span, k_bits - params.b_e);
}

double residual_jamming_variance(double p_j, double gain_sq, double distance,
                                 const SystemParams& params) {
    if (!(p_j >= 0.0))
        throw std::domain_error("residual_jamming_variance: p_j must be >= 0");
    if (!(distance > 0.0))
        throw std::domain_error("residual_jamming_variance: distance must be > 0");
    return params.theta * params.theta * p_j * gain_sq / std::pow(distance, params.alpha);
}

double gamma_d(double p_s, double p_j, double gain_sq, double distance,
               const SystemParams& params) {
    if (!(p_s >= 0.0)) throw std::domain_error("gamma_d: p_s must be >= 0");
    if (!(p_j >= 0.0)) throw std::domain_error("gamma_d: p_j must be >= 0");
    if (!(distance > 0.0)) throw std::domain_error("gamma_d: distance must be > 0");
    const double loss = std::pow(distance, params.alpha);
    const double signal = p_s * gain_sq / loss;
    const double residue = params.theta * params.theta * p_j * gain_sq / loss;
    const double floor = residue + params.effective_noise();
    return (signal + floor) / floor;
}

double gamma_e_worst_case(int k_bits, const SystemParams& params) {
    if (k_bits < 0) throw std::domain_error("gamma_e_worst_case: k_bits must be >= 0");
    const double span_sq = std::exp2(2.0 * (params.b_e - k_bits));
    const double four_l_sq = 4.0 * params.l * params.l;
    const double numerator = 1.0 + four_l_sq / (12.0 * span_sq);
    const double denominator = four_l_sq / (2.0 * kPiE * span_sq);
    return numerator / denominator;
}

double capacity_bound(double gamma) {
    if (!(gamma >= 1.0)) throw std::domain_error("capacity_bound: gamma must be >= 1");
    return std::log2(gamma);
}

double secrecy_rate(const SystemParams& params) {
    if (!(params.gamma_d_star >= params.gamma_e_star))
        throw rate_infeasible_error("secrecy_rate: gamma_d_star < gamma_e_star");
    return std::log2(params.gamma_d_star) - std::log2(params.gamma_e_star);
}

} // namespace serj
