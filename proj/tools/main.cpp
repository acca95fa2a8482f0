#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relaysec/experiment.hpp"
#include "relaysec/params.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Secrecy outage capacity toolkit for wireless information and power\n"
        "transfer over a large-antenna amplify-and-forward relay.\n"
        "Runs a figure preset or a custom sweep and writes CSV + manifest."};

    std::string preset = "fig3";
    std::string config;
    std::string out;
    std::string sweep;
    long long trials = -1;
    long long seed = -1;
    long long workers = -1;
    double snr_db = 0.0;
    bool optimize = false;

    app.add_option("--preset", preset, "Experiment preset")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "custom"}));
    app.add_option("--config", config, "key=value config file layered on the preset")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out, "Output CSV path (manifest lands next to it)");
    app.add_option("--trials", trials, "Monte Carlo trials per sweep point")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Master seed for the trial substreams")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--sweep", sweep, "Sweep as var:lo:hi:step");
    app.add_flag("--optimize-theta", optimize, "Maximize over the power splitting ratio");
    auto* snr_opt = app.add_option("--snr-db", snr_db, "Transmit SNR in dB (sets p_s)");
    app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        const relaysec::Preset base = relaysec::preset_from_string(preset);
        relaysec::ExperimentSpec spec = config.empty()
                                            ? relaysec::preset_spec(base)
                                            : relaysec::parse_config(config, base);
        if (trials >= 0) spec.trials = trials;
        if (seed >= 0) spec.seed = static_cast<std::uint64_t>(seed);
        if (workers >= 0) spec.workers = static_cast<unsigned>(workers);
        if (!out.empty()) spec.out_path = out;
        if (!sweep.empty()) spec.sweep = relaysec::parse_sweep(sweep);
        if (optimize) spec.optimize_theta = true;
        if (snr_opt->count() > 0) spec.params.p_s = relaysec::snr_db_to_power(snr_db);
        return relaysec::run_experiment(spec);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
