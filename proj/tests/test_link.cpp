#include <doctest.h>

#include <cmath>
#include <complex>

#include "relaysec/channel.hpp"
#include "relaysec/link.hpp"

using namespace relaysec;

namespace {

SystemParams defaults_with_theta(double theta) {
    SystemParams p;
    p.theta = theta;
    return validate(p);
}

}  // namespace

TEST_CASE("kappa_squared") {
    SystemParams p = defaults_with_theta(0.0);
    CHECK(kappa_squared(p, 100.0) == 0.0);

    p.theta = 0.1;
    // theta*eta*P*u / ((1-theta)*P*u + 1) = 80/901 at u = 100.
    CHECK(kappa_squared(p, 100.0) ==
          doctest::Approx(0.08879023307436182).epsilon(1e-12));

    p.theta = 1.0;
    CHECK(kappa_squared(p, 100.0) ==
          doctest::Approx(p.eta * p.alpha_sr * p.p_s * 100.0).epsilon(1e-12));
}

TEST_CASE("harvested_energy") {
    SystemParams p = defaults_with_theta(0.1);
    CHECK(harvested_energy(p, 100.0) == doctest::Approx(80.0).epsilon(1e-12));
    p.theta = 0.0;
    CHECK(harvested_energy(p, 100.0) == 0.0);
    p.theta = 0.3;
    p.eta = 0.0;
    CHECK(harvested_energy(p, 100.0) == 0.0);
    // Slot length scales the energy but not kappa^2.
    p.eta = 0.8;
    p.slot_t = 2.5;
    CHECK(harvested_energy(p, 100.0) == doctest::Approx(2.5 * 0.3 * 0.8 * 10.0 * 100.0));
    CHECK(kappa_squared(p, 100.0) ==
          doctest::Approx(0.3 * 0.8 * 10.0 * 100.0 / (0.7 * 10.0 * 100.0 + 1.0)));
}

TEST_CASE("scalar-case SNRs agree with hand evaluation") {
    SystemParams p;
    p.n_r = 1;
    p.rho = 1.0;
    p.theta = 0.1;
    p = validate(p);
    const DerivedCoeffs k = derive_coeffs(p);

    ChannelRealization ch;
    ch.h_sr = {{1.0, 1.0}};      // u = 2
    ch.h_rd_hat = {{2.0, 0.0}};  // v = 4
    ch.err = {{0.0, 0.0}};
    ch.h_rd = ch.h_rd_hat;       // rho = 1
    ch.h_re = {{0.5, -0.5}};     // |h_re^H h_hat|^2 = 2

    const double u = 2.0, v = 4.0, w = 16.0, z = 2.0;
    const double gd_expected = (k.a * 0.1 * 0.9 * w * u * u) /
                               (k.b * 0.1 * w * u + v * (k.c * 0.9 * u + 1.0));
    const double ge_expected = (k.e_coef * 0.1 * 0.9 * z * u * u) /
                               (k.f * 0.1 * z * u + v * (k.c * 0.9 * u + 1.0));
    CHECK(gamma_destination(p, k, ch) == doctest::Approx(gd_expected).epsilon(1e-12));
    CHECK(gamma_eavesdropper(p, k, ch) == doctest::Approx(ge_expected).epsilon(1e-12));
    CHECK(gamma_destination(p, k, ch) == doctest::Approx(460.8 / 101.6).epsilon(1e-12));
    CHECK(gamma_eavesdropper(p, k, ch) == doctest::Approx(57.6 / 79.2).epsilon(1e-12));
}

TEST_CASE("splitting boundaries zero both SNRs") {
    for (double theta : {0.0, 1.0}) {
        const SystemParams p = defaults_with_theta(theta);
        const DerivedCoeffs k = derive_coeffs(p);
        auto rng = trial_generator(5, 11);
        const ChannelRealization ch = draw(p, rng);
        CHECK(gamma_destination(p, k, ch) == 0.0);
        CHECK(gamma_eavesdropper(p, k, ch) == 0.0);
    }
}

TEST_CASE("no eavesdropper link in the alpha_re -> 0 limit") {
    const SystemParams p = defaults_with_theta(0.1);
    DerivedCoeffs k = derive_coeffs(p);
    k.e_coef = 0.0;
    k.f = 0.0;
    auto rng = trial_generator(6, 0);
    const ChannelRealization ch = draw(p, rng);
    CHECK(gamma_eavesdropper(p, k, ch) == 0.0);
}

TEST_CASE("evaluate_link populates a consistent sample") {
    const SystemParams p = defaults_with_theta(0.1);
    const DerivedCoeffs k = derive_coeffs(p);
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = trial_generator(77, t);
        const ChannelRealization ch = draw(p, rng);
        const LinkSample s = evaluate_link(p, k, ch);
        CHECK(s.gamma_d >= 0.0);
        CHECK(s.gamma_e >= 0.0);
        CHECK(s.kappa_sq >= 0.0);
        CHECK(s.harvested_energy >= 0.0);
        CHECK(s.c_d_inst == doctest::Approx(p.bandwidth_w * std::log2(1.0 + s.gamma_d)));
        CHECK(s.c_e_inst == doctest::Approx(p.bandwidth_w * std::log2(1.0 + s.gamma_e)));
        CHECK(s.secrecy_rate_inst == std::max(s.c_d_inst - s.c_e_inst, 0.0));
        CHECK(s.secrecy_rate_inst >= 0.0);
    }

    const SystemParams off = defaults_with_theta(0.0);
    auto rng = trial_generator(77, 0);
    const ChannelRealization ch = draw(off, rng);
    const LinkSample s = evaluate_link(off, derive_coeffs(off), ch);
    CHECK(s.kappa_sq == 0.0);
    CHECK(s.harvested_energy == 0.0);
    CHECK(s.gamma_d == 0.0);
    CHECK(s.gamma_e == 0.0);
    CHECK(s.c_d_inst == 0.0);
    CHECK(s.secrecy_rate_inst == 0.0);
}

TEST_CASE("global phase rotations leave the SNRs unchanged") {
    const SystemParams p = defaults_with_theta(0.1);
    const DerivedCoeffs k = derive_coeffs(p);
    auto rng = trial_generator(13, 2);
    ChannelRealization ch = draw(p, rng);
    const double gd = gamma_destination(p, k, ch);
    const double ge = gamma_eavesdropper(p, k, ch);

    const std::complex<double> phase = std::polar(1.0, 1.234);
    ChannelRealization rotated = ch;
    for (auto& z : rotated.h_sr) z *= phase;
    CHECK(gamma_destination(p, k, rotated) == doctest::Approx(gd).epsilon(1e-12));

    rotated = ch;
    for (auto& z : rotated.h_re) z *= phase;
    CHECK(gamma_eavesdropper(p, k, rotated) == doctest::Approx(ge).epsilon(1e-12));

    rotated = ch;
    for (auto& z : rotated.h_rd) z *= phase;
    CHECK(gamma_destination(p, k, rotated) == doctest::Approx(gd).epsilon(1e-12));
}

TEST_CASE("gamma_d grows with the source fading norm") {
    const SystemParams p = defaults_with_theta(0.1);
    const DerivedCoeffs k = derive_coeffs(p);
    auto rng = trial_generator(21, 4);
    ChannelRealization ch = draw(p, rng);
    double prev = gamma_destination(p, k, ch);
    for (double scale : {1.1, 1.5, 2.0, 4.0, 10.0}) {
        ChannelRealization scaled = ch;
        for (auto& z : scaled.h_sr) z *= scale;
        const double cur = gamma_destination(p, k, scaled);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("degenerate estimated CSI yields zero, not NaN") {
    const SystemParams p = defaults_with_theta(0.1);
    const DerivedCoeffs k = derive_coeffs(p);
    auto rng = trial_generator(3, 3);
    ChannelRealization ch = draw(p, rng);
    for (auto& z : ch.h_rd_hat) z = {0.0, 0.0};
    CHECK(gamma_destination(p, k, ch) == 0.0);
    CHECK(gamma_eavesdropper(p, k, ch) == 0.0);
    const LinkSample s = evaluate_link(p, k, ch);
    CHECK(std::isfinite(s.secrecy_rate_inst));
}

TEST_CASE("gamma_d concentrates as the antenna count grows") {
    const int trials = 2000;
    double spread[2] = {0.0, 0.0};
    int idx = 0;
    for (int n : {16, 256}) {
        SystemParams p;
        p.n_r = n;
        p = validate(p);
        const DerivedCoeffs k = derive_coeffs(p);
        double sum = 0.0, sum2 = 0.0;
        for (int t = 0; t < trials; ++t) {
            auto rng = trial_generator(31 + n, static_cast<std::uint64_t>(t));
            const ChannelRealization ch = draw(p, rng);
            const double g = gamma_destination(p, k, ch) / static_cast<double>(n);
            sum += g;
            sum2 += g * g;
        }
        const double mean = sum / trials;
        spread[idx++] = (sum2 / trials - mean * mean) / (mean * mean);
    }
    CHECK(spread[1] < spread[0]);
}
