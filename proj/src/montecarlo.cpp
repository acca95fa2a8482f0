#include "relaysec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "relaysec/capacity.hpp"
#include "relaysec/channel.hpp"
#include "relaysec/link.hpp"

namespace relaysec::montecarlo {

namespace {

unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

// Runs fn(trial_index, realization) for every index in [0, trials). Trial i
// derives its generator from (seed, i), so the chunking leaves no trace in
// the results: fn must only write to per-trial slots or commutative
// accumulators.
template <typename Fn>
void run_trials(const SystemParams& p, std::int64_t trials, std::uint64_t seed,
                unsigned workers, Fn&& fn) {
    auto span_body = [&](std::int64_t lo, std::int64_t hi) {
        ChannelRealization ch;
        for (std::int64_t i = lo; i < hi; ++i) {
            auto rng = trial_generator(seed, static_cast<std::uint64_t>(i));
            draw(p, rng, ch);
            fn(i, ch);
        }
    };

    const unsigned n_workers = resolve_workers(workers);
    if (n_workers <= 1 || trials < 2) {
        span_body(0, trials);
        return;
    }
    const std::int64_t chunk = (trials + n_workers - 1) / n_workers;
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
        const std::int64_t hi = std::min(lo + chunk, trials);
        if (lo >= hi) break;
        pool.emplace_back(span_body, lo, hi);
    }
    for (auto& t : pool) t.join();
}

double sample_std(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

std::int64_t quantile_index(std::int64_t trials, double epsilon) {
    auto kept = static_cast<std::int64_t>(std::ceil((1.0 - epsilon) * static_cast<double>(trials) - 1e-9));
    kept = std::clamp<std::int64_t>(kept, 1, trials);
    return trials - kept;
}

OutageEstimate estimate_outage(const SystemParams& raw, double rate_bps,
                               std::int64_t trials, std::uint64_t seed,
                               unsigned workers) {
    const SystemParams p = validate(raw);
    if (rate_bps < 0.0)
        throw std::invalid_argument("estimate_outage: rate must be nonnegative");
    if (trials < 1000)
        throw std::invalid_argument("estimate_outage: trials must be at least 1000");

    const DerivedCoeffs k = derive_coeffs(p);
    const double c_d = capacity_destination(p, k);
    std::atomic<std::int64_t> outages{0};
    run_trials(p, trials, seed, workers, [&](std::int64_t, const ChannelRealization& ch) {
        const double c_e = p.bandwidth_w * std::log2(1.0 + gamma_eavesdropper(p, k, ch));
        if (rate_bps > c_d - c_e) outages.fetch_add(1, std::memory_order_relaxed);
    });

    OutageEstimate est;
    est.trials = trials;
    est.p_out = static_cast<double>(outages.load()) / static_cast<double>(trials);
    est.half_width = 3.0 * std::sqrt(est.p_out * (1.0 - est.p_out) / static_cast<double>(trials));
    return est;
}

double empirical_secrecy_outage_capacity(const SystemParams& raw, std::int64_t trials,
                                         std::uint64_t seed, unsigned workers) {
    const SystemParams p = validate(raw);
    if (trials < 10000)
        throw std::invalid_argument(
            "empirical_secrecy_outage_capacity: trials must be at least 10000");

    const DerivedCoeffs k = derive_coeffs(p);
    std::vector<double> rates(static_cast<std::size_t>(trials));
    run_trials(p, trials, seed, workers, [&](std::int64_t i, const ChannelRealization& ch) {
        const double c_d = p.bandwidth_w * std::log2(1.0 + gamma_destination(p, k, ch));
        const double c_e = p.bandwidth_w * std::log2(1.0 + gamma_eavesdropper(p, k, ch));
        rates[static_cast<std::size_t>(i)] = std::max(c_d - c_e, 0.0);
    });

    std::sort(rates.begin(), rates.end());
    return rates[static_cast<std::size_t>(quantile_index(trials, p.epsilon))];
}

std::vector<std::pair<double, double>> empirical_cdf_gamma_e(
    const SystemParams& raw, std::int64_t trials, std::uint64_t seed,
    std::span<const double> grid, unsigned workers) {
    const SystemParams p = validate(raw);
    if (trials < 1)
        throw std::invalid_argument("empirical_cdf_gamma_e: trials must be positive");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("empirical_cdf_gamma_e: grid must be sorted ascending");

    const DerivedCoeffs k = derive_coeffs(p);
    std::vector<double> samples(static_cast<std::size_t>(trials));
    run_trials(p, trials, seed, workers, [&](std::int64_t i, const ChannelRealization& ch) {
        samples[static_cast<std::size_t>(i)] = gamma_eavesdropper(p, k, ch);
    });
    std::sort(samples.begin(), samples.end());

    std::vector<std::pair<double, double>> cdf;
    cdf.reserve(grid.size());
    for (double x : grid) {
        const auto count = std::upper_bound(samples.begin(), samples.end(), x) - samples.begin();
        cdf.emplace_back(x, static_cast<double>(count) / static_cast<double>(trials));
    }
    return cdf;
}

LinkStats collect_link_stats(const SystemParams& raw, std::int64_t trials,
                             std::uint64_t seed, unsigned workers) {
    const SystemParams p = validate(raw);
    if (trials < 1)
        throw std::invalid_argument("collect_link_stats: trials must be positive");

    const DerivedCoeffs k = derive_coeffs(p);
    std::vector<double> gamma_d(static_cast<std::size_t>(trials));
    std::vector<double> c_d(static_cast<std::size_t>(trials));
    std::vector<double> harvested(static_cast<std::size_t>(trials));
    std::atomic<std::int64_t> degenerate{0};
    run_trials(p, trials, seed, workers, [&](std::int64_t i, const ChannelRealization& ch) {
        const LinkSample s = evaluate_link(p, k, ch);
        const auto idx = static_cast<std::size_t>(i);
        gamma_d[idx] = s.gamma_d;
        c_d[idx] = s.c_d_inst;
        harvested[idx] = s.harvested_energy;
        if (norm_sq(ch.h_rd_hat) <= 0.0) degenerate.fetch_add(1, std::memory_order_relaxed);
    });

    // Reductions run sequentially over the full arrays so the result is
    // independent of the worker count.
    LinkStats stats;
    stats.trials = trials;
    double sum_gd = 0, sum_cd = 0, sum_eh = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        sum_gd += gamma_d[idx];
        sum_cd += c_d[idx];
        sum_eh += harvested[idx];
    }
    stats.gamma_d_mean = sum_gd / static_cast<double>(trials);
    stats.c_d_mean = sum_cd / static_cast<double>(trials);
    stats.c_d_std = sample_std(c_d, stats.c_d_mean);
    stats.harvested_mean = sum_eh / static_cast<double>(trials);
    stats.degenerate_draws = degenerate.load();
    return stats;
}

}  // namespace relaysec::montecarlo
