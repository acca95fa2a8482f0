#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "relaysec/params.hpp"

namespace relaysec {

using cvec = std::vector<std::complex<double>>;

// One draw of all small-scale fading vectors plus the CSI error vector.
// Every entry is circularly-symmetric complex Gaussian with zero mean and
// unit variance; h_rd is the exact combination
// sqrt(rho)*h_rd_hat + sqrt(1-rho)*err.
struct ChannelRealization {
    cvec h_sr;      // source -> relay fading
    cvec h_rd_hat;  // estimated relay -> destination CSI
    cvec err;       // CSI error vector
    cvec h_rd;      // true relay -> destination CSI
    cvec h_re;      // relay -> eavesdropper fading
};

/// Generator for one trial, derived from (master_seed, trial_index) with a
/// counter mix so a trial's stream never depends on which worker runs it.
std::mt19937_64 trial_generator(std::uint64_t master_seed, std::uint64_t trial_index);

/// One complex Gaussian sample, zero mean, unit total variance: the polar
/// form of (x + iy)/sqrt(2) with x, y standard real normals.
std::complex<double> complex_normal(std::mt19937_64& rng);

/// Fills `out` with fresh length-n_r vectors. Generation order is fixed
/// (h_sr, h_rd_hat, err, h_re) so streams are stable across versions; h_rd
/// is composed, not drawn.
void draw(const SystemParams& p, std::mt19937_64& rng, ChannelRealization& out);
ChannelRealization draw(const SystemParams& p, std::mt19937_64& rng);

/// sqrt(rho)*h_rd_hat + sqrt(1-rho)*err, componentwise. Throws
/// std::invalid_argument on length mismatch or rho outside [0, 1].
cvec reconstruct_true_csi(std::span<const std::complex<double>> h_rd_hat,
                          std::span<const std::complex<double>> err, double rho);

}  // namespace relaysec
