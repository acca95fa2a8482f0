#include "relaysec/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relaysec/capacity.hpp"

namespace relaysec {

SplitResult optimize_theta(const SystemParams& p, double grid_step, bool refine) {
    if (!(grid_step > 0.0 && grid_step <= 0.01))
        throw std::invalid_argument("optimize_theta: grid_step must lie in (0, 0.01]");
    SystemParams q = p;
    q.theta = 0.5;  // placeholder; the search owns theta
    validate(q);

    SplitResult result;
    auto objective = [&](double theta) {
        q.theta = theta;
        ++result.evaluations;
        return secrecy_outage_capacity(q, derive_coeffs(q)).c_soc;
    };

    const auto steps = static_cast<std::int64_t>(std::floor(1.0 / grid_step + 1e-9));
    double best_theta = 0.0;
    double best_value = objective(0.0);
    for (std::int64_t i = 1; i <= steps; ++i) {
        const double theta = std::min(static_cast<double>(i) * grid_step, 1.0);
        const double value = objective(theta);
        if (value > best_value) {
            best_value = value;
            best_theta = theta;
        }
    }
    if (static_cast<double>(steps) * grid_step < 1.0) {
        const double value = objective(1.0);
        if (value > best_value) {
            best_value = value;
            best_theta = 1.0;
        }
    }

    if (refine) {
        double lo = std::max(best_theta - grid_step, 0.0);
        double hi = std::min(best_theta + grid_step, 1.0);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo);
        double x2 = lo + gr * (hi - lo);
        double f1 = objective(x1);
        double f2 = objective(x2);
        auto consider = [&](double theta, double value) {
            if (value > best_value) {
                best_value = value;
                best_theta = theta;
            }
        };
        consider(x1, f1);
        consider(x2, f2);
        while (hi - lo > 1e-10) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = objective(x2);
                consider(x2, f2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = objective(x1);
                consider(x1, f1);
            }
        }
    }

    result.theta_star = best_theta;
    result.c_soc_star = best_value;
    return result;
}

}  // namespace relaysec
