#include "relaysec/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relaysec {

namespace {

bool theta_interior(const SystemParams& p) {
    return p.theta > 0.0 && p.theta < 1.0;
}

}  // namespace

double capacity_destination(const SystemParams& p, const DerivedCoeffs& k) {
    const double n = static_cast<double>(p.n_r);
    const double th = p.theta;
    const double num = k.a * th * (1.0 - th) * p.rho * n * n * n;
    const double den = k.b * th * p.rho * n * n + k.c * (1.0 - th) * n + 1.0;
    return p.bandwidth_w * std::log2(1.0 + num / den);
}

double gamma_e_cdf(double x, const SystemParams& p, const DerivedCoeffs& k) {
    if (x < 0.0) throw std::invalid_argument("gamma_e_cdf: x must be nonnegative");
    // Degenerate splits (and eta = 0) put all mass at gamma_e = 0.
    if (!theta_interior(p) || k.f <= 0.0) return 1.0;

    const double n = static_cast<double>(p.n_r);
    const double th = p.theta;
    const double support_end = k.e_coef * (1.0 - th) * n / k.f;
    if (x >= support_end) return 1.0;
    const double num = (k.c * (1.0 - th) * n + 1.0) * x;
    const double den = k.e_coef * th * (1.0 - th) * n * n - k.f * th * n * x;
    return 1.0 - std::exp(-num / den);
}

double gamma_e_outage_threshold(const SystemParams& p, const DerivedCoeffs& k) {
    if (!theta_interior(p) || k.e_coef <= 0.0) return 0.0;
    const double n = static_cast<double>(p.n_r);
    const double th = p.theta;
    const double log_eps = std::log(p.epsilon);
    // Numerator and denominator are both negative for epsilon < 1, so the
    // threshold is strictly positive on the valid range.
    const double num = k.e_coef * th * (1.0 - th) * n * n * log_eps;
    const double den = k.f * th * n * log_eps - k.c * (1.0 - th) * n - 1.0;
    return std::max(num / den, 0.0);
}

CapacityResult secrecy_outage_capacity(const SystemParams& p, const DerivedCoeffs& k) {
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0))
        throw std::invalid_argument("secrecy_outage_capacity: epsilon must be inside (0, 1)");
    CapacityResult r;
    r.c_d = capacity_destination(p, k);
    r.gamma_e_threshold = gamma_e_outage_threshold(p, k);
    const double c_e = p.bandwidth_w * std::log2(1.0 + r.gamma_e_threshold);
    r.c_soc = std::max(r.c_d - c_e, 0.0);
    return r;
}

double asymptotic_c_soc(const SystemParams& p) {
    if (!theta_interior(p))
        throw std::invalid_argument("asymptotic_c_soc: theta must be strictly inside (0, 1)");
    if (p.eta <= 0.0) return 0.0;  // no harvested power, no rate at any p_s
    const double n = static_cast<double>(p.n_r);
    const double th = p.theta;
    const double log_eps = std::log(p.epsilon);
    const double num = p.rho * p.alpha_rd * n * (p.eta * th * p.alpha_re * log_eps - (1.0 - th));
    const double den = (p.eta * p.alpha_rd * p.rho * th * n + (1.0 - th)) * p.alpha_re * log_eps;
    const double arg = num / den;
    if (arg <= 1.0) return 0.0;
    return p.bandwidth_w * std::log2(arg);
}

}  // namespace relaysec
