#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "relaysec/params.hpp"

namespace relaysec::montecarlo {

// Empirical outage frequency with a 3-sigma binomial confidence half-width.
struct OutageEstimate {
    double p_out = 0;
    std::int64_t trials = 0;
    double half_width = 0;  // 3*sqrt(p_out*(1-p_out)/trials)
};

// Per-draw statistics of the destination link, for quantifying how far the
// instantaneous capacity sits from its hardened constant.
struct LinkStats {
    std::int64_t trials = 0;
    double gamma_d_mean = 0;
    double c_d_mean = 0;   // bit/s
    double c_d_std = 0;    // sample standard deviation, bit/s
    double harvested_mean = 0;
    std::int64_t degenerate_draws = 0;  // draws with |h_rd_hat| == 0
};

// One figure-reproduction row; byte-identical reproducible under fixed seed.
struct SweepRecord {
    double sweep_value = 0;
    double c_soc_analytic = 0;
    double c_soc_empirical = 0;
    double c_d = 0;
    std::optional<double> c_soc_asymptotic;
    std::optional<double> theta_star;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Frequency of the outage event {rate > C_D - C_E} over independent channel
/// realizations. C_D is the hardened closed-form constant; C_E comes from the
/// full per-draw eavesdropper SNR. Requires rate >= 0 and trials >= 1000.
/// workers = 0 picks the hardware concurrency; results do not depend on it.
OutageEstimate estimate_outage(const SystemParams& p, double rate_bps,
                               std::int64_t trials, std::uint64_t seed,
                               unsigned workers = 0);

/// The largest rate whose empirical outage frequency equals epsilon: the
/// order statistic at the epsilon tail of the sorted per-draw instantaneous
/// secrecy rates, clipped at 0. Requires trials >= 10000.
double empirical_secrecy_outage_capacity(const SystemParams& p, std::int64_t trials,
                                         std::uint64_t seed, unsigned workers = 0);

/// Empirical cdf of the per-draw eavesdropper SNR on an ascending grid.
std::vector<std::pair<double, double>> empirical_cdf_gamma_e(
    const SystemParams& p, std::int64_t trials, std::uint64_t seed,
    std::span<const double> grid, unsigned workers = 0);

LinkStats collect_link_stats(const SystemParams& p, std::int64_t trials,
                             std::uint64_t seed, unsigned workers = 0);

/// Ascending-order index of the epsilon-tail order statistic for a sample of
/// size trials: everything strictly below it has frequency ~epsilon.
std::int64_t quantile_index(std::int64_t trials, double epsilon);

}  // namespace relaysec::montecarlo
