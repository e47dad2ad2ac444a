#ifndef SERJ_MODEL_HPP
#define SERJ_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace serj {

/// Physical and protocol constants shared by every link in a run.
///
/// Defaults reproduce the reference operating point: unit receiver noise,
/// ideal receiver quantization, 14-bit converters on both sides, outage
/// budget 0.1 and thresholds (42, 34).
struct SystemParams {
    double alpha = 3.0;        ///< path-loss exponent (>= 2)
    double theta = 1e-6;       ///< channel-estimation error std dev
    double sigma_d_sq = 1.0;   ///< receiver AWGN variance
    double delta_d_sq = 0.0;   ///< receiver quantization-noise numerator (variance is /12)
    int b_d = 14;              ///< receiver A/D resolution, bits
    int b_e = 14;              ///< eavesdropper A/D resolution bound, bits
    double l = 1.0;            ///< A/D loading factor (> 0)
    double gamma_d_star = 42.0; ///< reliability threshold (> 1)
    double gamma_e_star = 34.0; ///< secrecy threshold (> pi*e/6)
    double epsilon = 0.1;      ///< end-to-end outage budget, in (0, 1)

    /// Effective noise floor at the receiver: AWGN plus quantization variance.
    double effective_noise() const { return sigma_d_sq + delta_d_sq / 12.0; }

    /// Throws config_error naming the offending field.
    void validate() const;
};

/// Lower bound on gamma_e_star: the secrecy threshold must exceed pi*e/6 or
/// no key length can enforce it.
double gamma_e_star_floor();

struct Node {
    std::string id;
    double x = 0.0;
    double y = 0.0;
};

/// Legitimate nodes and the source/destination pair. Eavesdroppers are
/// deliberately absent: nothing downstream takes them as input.
struct NetworkTopology {
    std::vector<Node> nodes;
    std::string source;
    std::string destination;

    /// Throws config_error on duplicate ids, missing endpoints,
    /// source == destination, or coincident node coordinates.
    void validate() const;

    const Node& node(std::string_view id) const;
};

/// One hop of a path. distance is the Euclidean distance between endpoints.
struct Link {
    std::string from;
    std::string to;
    double distance = 0.0;
};

/// A fading realization: squared channel gain |h|^2, unit-mean exponential
/// under Rayleigh fading.
struct ChannelDraw {
    double gain_sq = 0.0;
};

/// |h|^2 / d^alpha; multiplying by the transmit power gives received power.
double path_loss_gain(double distance, double alpha, double gain_sq);

/// Receiver A/D step: 2*l*sqrt(P_S)*|h| / (2^b_D * d^(alpha/2)).
/// Diagnostic only; the routing math treats receiver quantization noise as
/// the fixed parameter delta_d_sq.
double adc_resolution_receiver(double p_s, double gain_sq, double distance,
                               const SystemParams& params);

/// Eavesdropper A/D step after enlarging its span to absorb 2^k jamming
/// levels: 2*l*sqrt(P_S)*|h| / (2^(b_E - k) * d^(alpha/2)). k = 0 gives the
/// un-jammed resolution.
double adc_resolution_eavesdropper(double p_s, double gain_sq, double distance,
                                   int k_bits, const SystemParams& params);

/// Variance of the jamming residue left after imperfect cancellation:
/// theta^2 * P_J * |h|^2 / d^alpha.
double residual_jamming_variance(double p_j, double gain_sq, double distance,
                                 const SystemParams& params);

/// Reliability metric at the legitimate receiver,
///   (S + sigma_J^2 + N) / (sigma_J^2 + N)
/// with S the received signal power and N the effective noise floor.
/// Always >= 1; equals 1 when p_s = 0.
double gamma_d(double p_s, double p_j, double gain_sq, double distance,
               const SystemParams& params);

/// Worst-case eavesdropper metric for k key bits per jamming symbol. The
/// eavesdropper's distance, fading gain and transmit power all cancel; only
/// (b_e, l, k) remain. Strictly decreasing in k.
double gamma_e_worst_case(int k_bits, const SystemParams& params);

/// Capacity bound in bits per channel use for a metric value: log2(gamma).
double capacity_bound(double gamma);

/// Achievable secrecy rate log2(gamma_d_star) - log2(gamma_e_star), bits per
/// channel use. Throws rate_infeasible_error if negative.
double secrecy_rate(const SystemParams& params);

} // namespace serj

#endif
