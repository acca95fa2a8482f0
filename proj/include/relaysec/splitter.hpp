#pragma once

#include <cstdint>

#include "relaysec/params.hpp"

namespace relaysec {

struct SplitResult {
    double theta_star = 0;          // argmax of the secrecy outage capacity
    double c_soc_star = 0;          // bit/s at theta_star
    std::int64_t evaluations = 0;   // objective evaluations performed
};

/// Maximizes the secrecy outage capacity over the splitting ratio by scanning
/// the grid {0, grid_step, ..., 1} and, when refine is set, running a
/// golden-section pass within one grid step of the best point. The objective
/// is not concave, so refinement never replaces the global grid scan.
/// grid_step must lie in (0, 0.01]. The theta field of p is ignored.
SplitResult optimize_theta(const SystemParams& p, double grid_step = 1e-3,
                           bool refine = true);

}  // namespace relaysec
