#include "relaysec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaysec {

namespace {

// splitmix64 output function on the state master_seed + k*golden; the
// standard counter-derived substream construction.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void fill_gaussian(cvec& v, std::size_t n, std::mt19937_64& rng) {
    v.resize(n);
    for (auto& z : v) z = complex_normal(rng);
}

}  // namespace

std::mt19937_64 trial_generator(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(mix64(master_seed + (trial_index + 1) * 0x9e3779b97f4a7c15ULL));
}

std::complex<double> complex_normal(std::mt19937_64& rng) {
    // 53-bit uniforms; u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

void draw(const SystemParams& p, std::mt19937_64& rng, ChannelRealization& out) {
    const auto n = static_cast<std::size_t>(p.n_r);
    fill_gaussian(out.h_sr, n, rng);
    fill_gaussian(out.h_rd_hat, n, rng);
    fill_gaussian(out.err, n, rng);
    fill_gaussian(out.h_re, n, rng);

    const double sr = std::sqrt(p.rho);
    const double se = std::sqrt(1.0 - p.rho);
    out.h_rd.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.h_rd[i] = sr * out.h_rd_hat[i] + se * out.err[i];
}

ChannelRealization draw(const SystemParams& p, std::mt19937_64& rng) {
    ChannelRealization ch;
    draw(p, rng, ch);
    return ch;
}

cvec reconstruct_true_csi(std::span<const std::complex<double>> h_rd_hat,
                          std::span<const std::complex<double>> err, double rho) {
    if (h_rd_hat.size() != err.size())
        throw std::invalid_argument("reconstruct_true_csi: vector lengths differ (" +
                                    std::to_string(h_rd_hat.size()) + " vs " +
                                    std::to_string(err.size()) + ")");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("reconstruct_true_csi: rho must be within [0, 1]");
    const double sr = std::sqrt(rho);
    const double se = std::sqrt(1.0 - rho);
    cvec out(h_rd_hat.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sr * h_rd_hat[i] + se * err[i];
    return out;
}

}  // namespace relaysec
