#include "relaysec/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relaysec {

namespace {

[[noreturn]] void reject(const std::string& field, double got, const std::string& constraint) {
    std::ostringstream msg;
    msg << field << " must be " << constraint << ", got " << got;
    throw std::invalid_argument(msg.str());
}

void check_finite(const std::string& field, double v) {
    if (!std::isfinite(v)) reject(field, v, "finite");
}

void check_positive(const std::string& field, double v) {
    check_finite(field, v);
    if (v <= 0.0) reject(field, v, "positive");
}

void check_unit_interval(const std::string& field, double v) {
    check_finite(field, v);
    if (v < 0.0 || v > 1.0) reject(field, v, "within [0, 1]");
}

}  // namespace

SystemParams validate(const SystemParams& p) {
    if (p.n_r < 1) reject("n_r", p.n_r, "a positive integer");
    check_positive("p_s", p.p_s);
    check_unit_interval("theta", p.theta);
    check_unit_interval("rho", p.rho);
    check_unit_interval("eta", p.eta);
    check_finite("epsilon", p.epsilon);
    if (p.epsilon <= 0.0 || p.epsilon >= 1.0)
        reject("epsilon", p.epsilon, "strictly inside (0, 1)");
    check_positive("bandwidth_w", p.bandwidth_w);
    check_positive("alpha_sr", p.alpha_sr);
    check_positive("alpha_rd", p.alpha_rd);
    check_positive("alpha_re", p.alpha_re);
    check_positive("slot_t", p.slot_t);
    return p;
}

DerivedCoeffs derive_coeffs(const SystemParams& p) {
    DerivedCoeffs k;
    k.a = p.eta * p.p_s * p.p_s * p.alpha_sr * p.alpha_sr * p.alpha_rd;
    k.b = p.eta * p.p_s * p.alpha_sr * p.alpha_rd;
    k.c = p.p_s * p.alpha_sr;
    k.e_coef = p.eta * p.p_s * p.p_s * p.alpha_sr * p.alpha_sr * p.alpha_re;
    k.f = p.eta * p.p_s * p.alpha_sr * p.alpha_re;
    return k;
}

double snr_db_to_power(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

double power_to_snr_db(double p_s) {
    return 10.0 * std::log10(p_s);
}

}  // namespace relaysec
