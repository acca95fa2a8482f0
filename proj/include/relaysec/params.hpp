#pragma once

#include <string>

namespace relaysec {

// Scenario configuration. Noise variances at the relay, the destination and
// the eavesdropper are normalized to 1, so p_s is also the transmit SNR in
// linear scale (the CLI converts dB at the boundary).
struct SystemParams {
    int n_r = 100;             // relay antenna count
    double p_s = 10.0;         // source transmit power, linear units
    double theta = 0.1;        // power splitting ratio, [0, 1]
    double rho = 0.9;          // CSI correlation coefficient, [0, 1]
    double eta = 0.8;          // energy conversion efficiency, [0, 1]
    double epsilon = 0.05;     // outage probability bound, (0, 1)
    double bandwidth_w = 1e4;  // Hz, effective bandwidth multiplying log2
    double alpha_sr = 1.0;     // path loss source -> relay
    double alpha_rd = 1.0;     // path loss relay -> destination
    double alpha_re = 1.0;     // path loss relay -> eavesdropper
    double slot_t = 1.0;       // slot length, seconds (cancels in kappa^2)
};

// Composite constants of the two SNR expressions. "e" is stored as e_coef to
// avoid colliding with the CSI error vector.
struct DerivedCoeffs {
    double a = 0;       // eta * p_s^2 * alpha_sr^2 * alpha_rd
    double b = 0;       // eta * p_s * alpha_sr * alpha_rd
    double c = 0;       // p_s * alpha_sr
    double e_coef = 0;  // eta * p_s^2 * alpha_sr^2 * alpha_re
    double f = 0;       // eta * p_s * alpha_sr * alpha_re
};

/// Checks every range constraint and returns the params unchanged when they
/// all hold. Throws std::invalid_argument naming the offending field.
SystemParams validate(const SystemParams& p);

DerivedCoeffs derive_coeffs(const SystemParams& p);

double snr_db_to_power(double snr_db);
double power_to_snr_db(double p_s);

}  // namespace relaysec
