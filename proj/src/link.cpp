#include "relaysec/link.hpp"

#include <algorithm>
#include <cmath>

namespace relaysec {

double norm_sq(std::span<const std::complex<double>> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

double inner_product_mag_sq(std::span<const std::complex<double>> x,
                            std::span<const std::complex<double>> y) {
    std::complex<double> acc{0.0, 0.0};
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return std::norm(acc);
}

double kappa_squared(const SystemParams& p, double h_sr_norm_sq) {
    const double received = p.p_s * p.alpha_sr * h_sr_norm_sq;
    return p.theta * p.eta * received / ((1.0 - p.theta) * received + 1.0);
}

double harvested_energy(const SystemParams& p, double h_sr_norm_sq) {
    return p.theta * p.eta * p.alpha_sr * p.p_s * h_sr_norm_sq * p.slot_t;
}

namespace {

// Shared rational form of both SNRs: num_coef*theta*(1-theta)*w*u^2 over
// den_coef*theta*w*u + v*(c*(1-theta)*u + 1), where u = |h_sr|^2,
// v = |h_rd_hat|^2 and w is the squared inner product against h_rd_hat.
double snr_ratio(const SystemParams& p, double c, double num_coef, double den_coef,
                 double u, double v, double w) {
    if (v <= 0.0) return 0.0;  // degenerate estimated-CSI draw
    const double th = p.theta;
    const double num = num_coef * th * (1.0 - th) * w * u * u;
    const double den = den_coef * th * w * u + v * (c * (1.0 - th) * u + 1.0);
    return num / den;
}

}  // namespace

double gamma_destination(const SystemParams& p, const DerivedCoeffs& k,
                         const ChannelRealization& ch) {
    const double u = norm_sq(ch.h_sr);
    const double v = norm_sq(ch.h_rd_hat);
    const double w = inner_product_mag_sq(ch.h_rd, ch.h_rd_hat);
    return snr_ratio(p, k.c, k.a, k.b, u, v, w);
}

double gamma_eavesdropper(const SystemParams& p, const DerivedCoeffs& k,
                          const ChannelRealization& ch) {
    const double u = norm_sq(ch.h_sr);
    const double v = norm_sq(ch.h_rd_hat);
    const double w = inner_product_mag_sq(ch.h_re, ch.h_rd_hat);
    return snr_ratio(p, k.c, k.e_coef, k.f, u, v, w);
}

LinkSample evaluate_link(const SystemParams& p, const DerivedCoeffs& k,
                         const ChannelRealization& ch) {
    LinkSample s;
    const double u = norm_sq(ch.h_sr);
    s.kappa_sq = kappa_squared(p, u);
    s.harvested_energy = harvested_energy(p, u);
    s.gamma_d = gamma_destination(p, k, ch);
    s.gamma_e = gamma_eavesdropper(p, k, ch);
    s.c_d_inst = p.bandwidth_w * std::log2(1.0 + s.gamma_d);
    s.c_e_inst = p.bandwidth_w * std::log2(1.0 + s.gamma_e);
    s.secrecy_rate_inst = std::max(s.c_d_inst - s.c_e_inst, 0.0);
    return s;
}

}  // namespace relaysec
