#include "relaysec/experiment.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "relaysec/capacity.hpp"
#include "relaysec/splitter.hpp"

namespace relaysec {

namespace {

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_full(double v) { return fmt(v, "%.17g"); }

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + " value '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("invalid " + what + " value '" + text + "'");
    return value;
}

long long parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + " value '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("invalid " + what + " value '" + text + "'");
    return value;
}

bool parse_bool(const std::string& text, const std::string& what) {
    if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
    if (text == "0" || text == "false" || text == "off" || text == "no") return false;
    throw std::invalid_argument("invalid " + what + " value '" + text + "'");
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

const char* preset_name(Preset preset) {
    switch (preset) {
        case Preset::Fig2: return "fig2";
        case Preset::Fig3: return "fig3";
        case Preset::Fig4: return "fig4";
        case Preset::Fig5: return "fig5";
        case Preset::Fig6: return "fig6";
        case Preset::Custom: return "custom";
    }
    return "custom";
}

Preset preset_from_string(const std::string& name) {
    if (name == "fig2") return Preset::Fig2;
    if (name == "fig3") return Preset::Fig3;
    if (name == "fig4") return Preset::Fig4;
    if (name == "fig5") return Preset::Fig5;
    if (name == "fig6") return Preset::Fig6;
    if (name == "custom") return Preset::Custom;
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected fig2|fig3|fig4|fig5|fig6|custom)");
}

std::vector<double> SweepSpec::points() const {
    if (empty()) throw std::invalid_argument("sweep: no sweep variable configured");
    if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
    if (hi < lo) throw std::invalid_argument("sweep: range is empty (hi < lo)");
    const auto count = static_cast<std::int64_t>(
        std::floor((hi - lo) / step * (1.0 + 1e-12) + 1e-12));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count) + 1);
    for (std::int64_t i = 0; i <= count; ++i)
        values.push_back(std::min(lo + static_cast<double>(i) * step, hi));
    return values;
}

SweepSpec parse_sweep(const std::string& text) {
    std::array<std::string, 4> parts;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const auto colon = text.find(':', start);
        if (i < 3) {
            if (colon == std::string::npos)
                throw std::invalid_argument("sweep must look like var:lo:hi:step, got '" + text + "'");
            parts[static_cast<std::size_t>(i)] = text.substr(start, colon - start);
            start = colon + 1;
        } else {
            if (colon != std::string::npos)
                throw std::invalid_argument("sweep must look like var:lo:hi:step, got '" + text + "'");
            parts[static_cast<std::size_t>(i)] = text.substr(start);
        }
    }
    SweepSpec sweep;
    sweep.variable = parts[0];
    sweep.lo = parse_double(parts[1], "sweep lo");
    sweep.hi = parse_double(parts[2], "sweep hi");
    sweep.step = parse_double(parts[3], "sweep step");
    // Reject unknown variables up front.
    SystemParams probe;
    apply_sweep_value(probe, sweep.variable, sweep.lo);
    return sweep;
}

void apply_sweep_value(SystemParams& p, const std::string& variable, double value) {
    if (variable == "alpha_sr") p.alpha_sr = value;
    else if (variable == "alpha_rd") p.alpha_rd = value;
    else if (variable == "alpha_re") p.alpha_re = value;
    else if (variable == "theta") p.theta = value;
    else if (variable == "rho") p.rho = value;
    else if (variable == "eta") p.eta = value;
    else if (variable == "epsilon") p.epsilon = value;
    else if (variable == "p_s") p.p_s = value;
    else if (variable == "snr_db") p.p_s = snr_db_to_power(value);
    else if (variable == "n_r") p.n_r = static_cast<int>(std::llround(value));
    else if (variable == "bandwidth_w") p.bandwidth_w = value;
    else throw std::invalid_argument("unknown sweep variable '" + variable + "'");
}

ExperimentSpec preset_spec(Preset preset) {
    ExperimentSpec spec;
    spec.preset = preset;
    spec.params = SystemParams{};  // n_r=100, p_s=10, theta=0.1, rho=0.9, eta=0.8, W=10kHz
    switch (preset) {
        case Preset::Fig2:
            spec.params.p_s = 1.0;
            spec.params.epsilon = 0.01;
            spec.optimize_theta = true;
            spec.sweep = {"alpha_sr", 0.1, 1.0, 0.1};
            break;
        case Preset::Fig3:
            spec.sweep = {"alpha_re", 0.5, 2.0, 0.1};
            break;
        case Preset::Fig4:
            spec.sweep = {"snr_db", -10.0, 60.0, 5.0};
            break;
        case Preset::Fig5:
            spec.params.epsilon = 0.01;
            spec.optimize_theta = true;
            spec.sweep = {"snr_db", -10.0, 30.0, 5.0};
            break;
        case Preset::Fig6:
            spec.params.p_s = 1.0;
            spec.params.epsilon = 0.01;
            spec.optimize_theta = true;
            spec.sweep = {"alpha_re", 0.2, 2.0, 0.2};
            break;
        case Preset::Custom:
            break;
    }
    spec.out_path = std::string(preset_name(preset)) + ".csv";
    return spec;
}

ExperimentSpec parse_config(const std::string& path, Preset base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");

    struct Entry {
        int line;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key=value, got '" + text + "'");
        entries.push_back({line_no, trim(text.substr(0, eq)), trim(text.substr(eq + 1))});
    }

    // The preset key selects the baseline no matter where it appears, so it
    // is applied before any override.
    Preset preset = base;
    for (const auto& e : entries)
        if (e.key == "preset") preset = preset_from_string(e.value);
    ExperimentSpec spec = preset_spec(preset);

    for (const auto& e : entries) {
        const auto fail = [&](const std::string& what) {
            throw std::invalid_argument(path + ":" + std::to_string(e.line) + ": " + what);
        };
        try {
            if (e.key == "preset") continue;
            else if (e.key == "n_r") spec.params.n_r = static_cast<int>(parse_int(e.value, e.key));
            else if (e.key == "p_s") spec.params.p_s = parse_double(e.value, e.key);
            else if (e.key == "snr_db") spec.params.p_s = snr_db_to_power(parse_double(e.value, e.key));
            else if (e.key == "theta") spec.params.theta = parse_double(e.value, e.key);
            else if (e.key == "rho") spec.params.rho = parse_double(e.value, e.key);
            else if (e.key == "eta") spec.params.eta = parse_double(e.value, e.key);
            else if (e.key == "epsilon") spec.params.epsilon = parse_double(e.value, e.key);
            else if (e.key == "bandwidth_w") spec.params.bandwidth_w = parse_double(e.value, e.key);
            else if (e.key == "alpha_sr") spec.params.alpha_sr = parse_double(e.value, e.key);
            else if (e.key == "alpha_rd") spec.params.alpha_rd = parse_double(e.value, e.key);
            else if (e.key == "alpha_re") spec.params.alpha_re = parse_double(e.value, e.key);
            else if (e.key == "slot_t") spec.params.slot_t = parse_double(e.value, e.key);
            else if (e.key == "trials") spec.trials = parse_int(e.value, e.key);
            else if (e.key == "seed") spec.seed = static_cast<std::uint64_t>(parse_int(e.value, e.key));
            else if (e.key == "optimize_theta") spec.optimize_theta = parse_bool(e.value, e.key);
            else if (e.key == "workers") spec.workers = static_cast<unsigned>(parse_int(e.value, e.key));
            else if (e.key == "sweep") spec.sweep = parse_sweep(e.value);
            else if (e.key == "out") spec.out_path = e.value;
            else fail("unknown key '" + e.key + "'");
        } catch (const std::invalid_argument& ex) {
            const std::string prefix = path + ":";
            if (std::string(ex.what()).rfind(prefix, 0) == 0) throw;
            fail(ex.what());
        }
    }

    validate(spec.params);
    return spec;
}

std::vector<montecarlo::SweepRecord> run_sweep(const ExperimentSpec& spec) {
    const std::vector<double> values = spec.sweep.points();
    std::vector<montecarlo::SweepRecord> records;
    records.reserve(values.size());
    for (double value : values) {
        SystemParams p = spec.params;
        apply_sweep_value(p, spec.sweep.variable, value);
        p = validate(p);

        montecarlo::SweepRecord rec;
        rec.sweep_value = value;
        rec.trials = spec.trials;
        rec.seed = spec.seed;
        if (spec.optimize_theta) {
            const SplitResult split = optimize_theta(p);
            p.theta = split.theta_star;
            rec.theta_star = split.theta_star;
        }
        const DerivedCoeffs k = derive_coeffs(p);
        const CapacityResult cap = secrecy_outage_capacity(p, k);
        rec.c_d = cap.c_d;
        rec.c_soc_analytic = cap.c_soc;
        if (p.theta > 0.0 && p.theta < 1.0) rec.c_soc_asymptotic = asymptotic_c_soc(p);
        rec.c_soc_empirical =
            montecarlo::empirical_secrecy_outage_capacity(p, spec.trials, spec.seed, spec.workers);
        records.push_back(rec);
    }
    return records;
}

void write_csv(const ExperimentSpec& spec,
               const std::vector<montecarlo::SweepRecord>& records,
               const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps line endings stable
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << spec.sweep.variable
        << ",c_soc_analytic_bps,c_soc_empirical_bps,c_d_bps,c_soc_asymptotic_bps,"
           "theta_star,trials,seed\n";
    for (const auto& r : records) {
        out << fmt(r.sweep_value) << ',' << fmt(r.c_soc_analytic) << ','
            << fmt(r.c_soc_empirical) << ',' << fmt(r.c_d) << ','
            << (r.c_soc_asymptotic ? fmt(*r.c_soc_asymptotic) : "") << ','
            << (r.theta_star ? fmt(*r.theta_star) : "") << ',' << r.trials << ','
            << r.seed << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

void write_manifest(const ExperimentSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "preset=" << preset_name(spec.preset) << '\n'
        << "n_r=" << spec.params.n_r << '\n'
        << "p_s=" << fmt_full(spec.params.p_s) << '\n'
        << "theta=" << fmt_full(spec.params.theta) << '\n'
        << "rho=" << fmt_full(spec.params.rho) << '\n'
        << "eta=" << fmt_full(spec.params.eta) << '\n'
        << "epsilon=" << fmt_full(spec.params.epsilon) << '\n'
        << "bandwidth_w=" << fmt_full(spec.params.bandwidth_w) << '\n'
        << "alpha_sr=" << fmt_full(spec.params.alpha_sr) << '\n'
        << "alpha_rd=" << fmt_full(spec.params.alpha_rd) << '\n'
        << "alpha_re=" << fmt_full(spec.params.alpha_re) << '\n'
        << "slot_t=" << fmt_full(spec.params.slot_t) << '\n'
        << "sweep=" << spec.sweep.variable << ':' << fmt_full(spec.sweep.lo) << ':'
        << fmt_full(spec.sweep.hi) << ':' << fmt_full(spec.sweep.step) << '\n'
        << "trials=" << spec.trials << '\n'
        << "seed=" << spec.seed << '\n'
        << "optimize_theta=" << (spec.optimize_theta ? 1 : 0) << '\n'
        << "out=" << spec.out_path << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

int run_experiment(const ExperimentSpec& spec) {
    try {
        validate(spec.params);
        const auto records = run_sweep(spec);
        write_csv(spec, records, spec.out_path);
        write_manifest(spec, spec.out_path + ".manifest");
        std::cout << "wrote " << spec.out_path << " (" << records.size() << " rows) and "
                  << spec.out_path << ".manifest\n";
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}

}  // namespace relaysec
