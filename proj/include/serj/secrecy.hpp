#ifndef SERJ_SECRECY_HPP
#define SERJ_SECRECY_HPP

#include "serj/model.hpp"

namespace serj {

/// Network-wide secrecy constants. The same plan applies to every
/// transmitter: nothing in it depends on a particular link.
struct SecrecyPlan {
    int k_bits = 0;                ///< key bits per jamming symbol
    double beta = 0.0;             ///< jamming-to-signal power ratio P_J / P_S
    double gamma_e_achieved = 0.0; ///< worst-case eavesdropper metric at k_bits
};

/// Smallest key length k such that gamma_e_worst_case(k) < gamma_e_star.
/// The closed-form ceiling seeds the search; the inequality itself is the
/// authoritative check. Throws secrecy_infeasible_error when gamma_e_star
/// <= pi*e/6 or when k would exceed b_e + 32.
int min_key_bits(const SystemParams& params);

/// Jamming-to-signal ratio for a 2^k-level uniform jamming constellation:
/// beta = 2*l^2*(2^(2k+1) - 3*2^k + 1) / 3. Zero iff k = 0.
double jamming_ratio(int k_bits, double l);

/// min_key_bits + jamming_ratio + the achieved eavesdropper metric.
SecrecyPlan build_secrecy_plan(const SystemParams& params);

/// True iff 1 - (gamma_d_star - 1) * theta^2 * beta > 0, i.e. the jamming
/// residue leaves room for reliable reception at any power.
bool reliability_feasible(const SecrecyPlan& plan, const SystemParams& params);

} // namespace serj

#endif
