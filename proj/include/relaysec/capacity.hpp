#pragma once

#include "relaysec/params.hpp"

namespace relaysec {

struct CapacityResult {
    double c_d = 0;                // legitimate channel capacity, bit/s
    double gamma_e_threshold = 0;  // eavesdropper SNR exceeded with probability epsilon
    double c_soc = 0;              // secrecy outage capacity, bit/s, clipped at 0
};

/// Hardened (large-antenna) closed form of the legitimate channel capacity:
/// W*log2(1 + a*th*(1-th)*rho*N^3 / (b*th*rho*N^2 + c*(1-th)*N + 1)).
double capacity_destination(const SystemParams& p, const DerivedCoeffs& k);

/// Hardened cdf of the eavesdropper SNR. Support ends at e_coef*(1-theta)*N/f;
/// above it the cdf is 1. Throws std::invalid_argument for negative x.
double gamma_e_cdf(double x, const SystemParams& p, const DerivedCoeffs& k);

/// The SNR level the hardened eavesdropper cdf exceeds with probability
/// exactly epsilon (inverse of the tail at epsilon).
double gamma_e_outage_threshold(const SystemParams& p, const DerivedCoeffs& k);

/// Secrecy outage capacity: legitimate capacity minus the eavesdropper
/// capacity at the epsilon-exceedance SNR, clipped at 0.
CapacityResult secrecy_outage_capacity(const SystemParams& p, const DerivedCoeffs& k);

/// High-transmit-power limit of the secrecy outage capacity, independent of
/// p_s. The limit of the legitimate term keeps its CSI-accuracy factor rho.
/// Throws std::invalid_argument for theta in {0, 1} (expression degenerates).
double asymptotic_c_soc(const SystemParams& p);

}  // namespace relaysec
