#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relaysec/montecarlo.hpp"
#include "relaysec/params.hpp"

namespace relaysec {

enum class Preset { Fig2, Fig3, Fig4, Fig5, Fig6, Custom };

const char* preset_name(Preset preset);
Preset preset_from_string(const std::string& name);  // throws on unknown name

// Swept variable and inclusive range. Variables: alpha_sr, alpha_rd,
// alpha_re, theta, rho, eta, epsilon, p_s, snr_db, n_r, bandwidth_w.
struct SweepSpec {
    std::string variable;
    double lo = 0;
    double hi = 0;
    double step = 0;

    bool empty() const { return variable.empty(); }
    std::vector<double> points() const;  // throws on an empty or invalid range
};

SweepSpec parse_sweep(const std::string& text);  // "var:lo:hi:step"

struct ExperimentSpec {
    Preset preset = Preset::Fig3;
    SystemParams params;
    SweepSpec sweep;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    bool optimize_theta = false;
    unsigned workers = 0;  // 0 = hardware concurrency
    std::string out_path;
};

/// Defaults for a preset; every figure preset runs at n_r = 100, W = 10 kHz,
/// eta = 0.8, rho = 0.9 and theta = 0.1 unless it optimizes theta itself.
ExperimentSpec preset_spec(Preset preset);

/// Parses a key=value config file on top of the given base preset. Unknown
/// keys and malformed lines are rejected citing the line number; an empty
/// file yields the base preset unchanged. Resulting params are validated.
ExperimentSpec parse_config(const std::string& path, Preset base = Preset::Fig3);

/// Applies one sweep value (validating the result) and evaluates every
/// record column for it.
void apply_sweep_value(SystemParams& p, const std::string& variable, double value);

/// Evaluates all sweep points: analytic capacity, the high-power asymptote
/// where defined, the optimized split when requested, and the Monte Carlo
/// empirical capacity. Rows come back in sweep order.
std::vector<montecarlo::SweepRecord> run_sweep(const ExperimentSpec& spec);

void write_csv(const ExperimentSpec& spec,
               const std::vector<montecarlo::SweepRecord>& records,
               const std::string& path);  // throws on I/O failure

void write_manifest(const ExperimentSpec& spec, const std::string& path);

/// Runs the sweep and writes "<out>.csv" plus "<out>.csv.manifest".
/// Returns 0 on success; prints the failure and returns 1 otherwise.
int run_experiment(const ExperimentSpec& spec);

}  // namespace relaysec
