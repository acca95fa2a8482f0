#pragma once

#include <span>

#include "relaysec/channel.hpp"
#include "relaysec/params.hpp"

namespace relaysec {

// Instantaneous per-realization quantities of the AF relay chain.
struct LinkSample {
    double kappa_sq = 0;           // relay power constraint factor, squared
    double harvested_energy = 0;   // joules over one slot
    double gamma_d = 0;            // destination SNR
    double gamma_e = 0;            // eavesdropper SNR
    double c_d_inst = 0;           // bit/s
    double c_e_inst = 0;           // bit/s
    double secrecy_rate_inst = 0;  // bit/s, [c_d - c_e]^+
};

double norm_sq(std::span<const std::complex<double>> v);

/// |x^H y|^2 for equal-length vectors.
double inner_product_mag_sq(std::span<const std::complex<double>> x,
                            std::span<const std::complex<double>> y);

/// kappa^2 = theta*eta*alpha_sr*p_s*|h_sr|^2 / ((1-theta)*p_s*alpha_sr*|h_sr|^2 + 1).
/// The slot length cancels.
double kappa_squared(const SystemParams& p, double h_sr_norm_sq);

/// theta*eta*alpha_sr*p_s*|h_sr|^2*slot_t.
double harvested_energy(const SystemParams& p, double h_sr_norm_sq);

double gamma_destination(const SystemParams& p, const DerivedCoeffs& k,
                         const ChannelRealization& ch);
double gamma_eavesdropper(const SystemParams& p, const DerivedCoeffs& k,
                          const ChannelRealization& ch);

LinkSample evaluate_link(const SystemParams& p, const DerivedCoeffs& k,
                         const ChannelRealization& ch);

}  // namespace relaysec
