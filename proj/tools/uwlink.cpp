// uwlink: analysis CLI for VLF/LF electromagnetic links in conductive water.
// Every subcommand is a thin adapter over the library and prints plot-ready
// CSV to stdout (or --out). Exit codes: 0 success, 1 domain error, 2 usage or
// file-parse error.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uwlink/antenna.hpp"
#include "uwlink/bfsk.hpp"
#include "uwlink/capacity.hpp"
#include "uwlink/constants.hpp"
#include "uwlink/data_io.hpp"
#include "uwlink/link_budget.hpp"
#include "uwlink/medium.hpp"

namespace {

using namespace uwlink;

/// CLI outputs are computed quantities; quantize them to the 6-significant-
/// digit file grid so tables stay compact and byte-deterministic.
std::string fmt6(double value) { return format_number(round_to_6sig(value)); }

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

void print_kv(std::ostream& out, const char* key, double value) {
    out << key << "," << fmt6(value) << "\n";
}

ConfigFile load_config(const std::string& path) {
    if (path.empty()) return ConfigFile{};
    return parse_config(path);
}

/// Flag value wins over the config file, which wins over the built-in default.
double resolve(const CLI::Option* opt, double flag_value, const ConfigFile& config,
               const char* key, double fallback) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    return config.get(key, fallback);
}

// ---------------------------------------------------------------- medium ---

struct MediumArgs {
    std::string config_path;
    std::string out_path;
    double conductivity = 0.0;
    double frequency = 36000.0;
    double permeability = MU0;
    double rel_permittivity = 80.0;
    CLI::Option* conductivity_opt = nullptr;
};

int run_medium(const MediumArgs& args) {
    const ConfigFile config = load_config(args.config_path);
    ConductiveMedium medium;
    medium.conductivity = resolve(args.conductivity_opt, args.conductivity, config,
                                  "medium.conductivity_s_per_m", 0.0);
    medium.permeability = args.permeability;
    medium.relative_permittivity = args.rel_permittivity;
    medium.label = "cli";

    const PropagationConstants pc = propagation_constants(medium, args.frequency);
    const FieldRegions regions = field_regions(medium, args.frequency);
    const double ratio = conduction_displacement_ratio(medium, args.frequency);
    if (ratio < QUASI_STATIC_MIN_RATIO) {
        std::cerr << "warning: conduction/displacement ratio " << fmt6(ratio)
                  << " < " << fmt6(QUASI_STATIC_MIN_RATIO)
                  << "; the low-frequency approximation degrades here\n";
    }

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    out << "quantity,value\n";
    print_kv(out, "conductivity_s_per_m", medium.conductivity);
    print_kv(out, "frequency_hz", args.frequency);
    print_kv(out, "alpha_np_per_m", pc.attenuation_alpha);
    print_kv(out, "beta_rad_per_m", pc.phase_beta);
    print_kv(out, "attenuation_db_per_m", attenuation_db_per_m(medium, args.frequency));
    print_kv(out, "wavelength_m", wavelength(medium, args.frequency));
    print_kv(out, "skin_depth_m", skin_depth(medium, args.frequency));
    print_kv(out, "reactive_near_limit_m", regions.reactive_near_limit);
    print_kv(out, "radiative_near_limit_m", regions.radiative_near_limit);
    print_kv(out, "transition_limit_m", regions.transition_limit);
    print_kv(out, "quasi_static_ratio", ratio);
    print_kv(out, "quasi_static_ok", ratio >= QUASI_STATIC_MIN_RATIO ? 1.0 : 0.0);
    return 0;
}

// ------------------------------------------------------------- resonance ---

struct ResonanceArgs {
    std::string out_path;
    LaminateSpec spec = pzt5j_metglas_sample();
    double delta_v = 0.0;
    double delta_h = 0.0;
    CLI::Option* delta_v_opt = nullptr;
};

int run_resonance(const ResonanceArgs& args) {
    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    out << "quantity,value\n";
    print_kv(out, "resonance_frequency_hz", resonance_frequency(args.spec));
    if (args.delta_v_opt != nullptr && args.delta_v_opt->count() > 0) {
        print_kv(out, "me_coefficient_v_per_m_per_a_per_m",
                 me_coefficient(args.delta_v, args.delta_h, args.spec.piezo_thickness));
    }
    return 0;
}

// ------------------------------------------------------------- impedance ---

struct ImpedanceArgs {
    std::string config_path;
    std::string out_path;
    Resonator base;
    double drive = 0.0;
    std::size_t n_elements = 1;
    std::string wiring = "parallel";
    double f0_jitter = 0.0;
    double r_jitter = 0.0;
    std::uint64_t seed = 1;
    double f_start = 31000.0;
    double f_stop = 41000.0;
    std::size_t f_points = 401;
    CLI::Option* f0_opt = nullptr;
    CLI::Option* q_opt = nullptr;
};

int run_impedance(const ImpedanceArgs& args) {
    const ConfigFile config = load_config(args.config_path);
    Resonator base = args.base;
    base.f0 = resolve(args.f0_opt, args.base.f0, config, "antenna.f0_hz", args.base.f0);
    base.quality_q = resolve(args.q_opt, args.base.quality_q, config, "antenna.q",
                             args.base.quality_q);

    const Wiring wiring = args.wiring == "series" ? Wiring::Series : Wiring::Parallel;
    const ArraySpec array =
        args.f0_jitter > 0.0 || args.r_jitter > 0.0
            ? make_jittered_array(base, args.n_elements, wiring, args.f0_jitter,
                                  args.r_jitter, args.seed)
            : make_array(base, args.n_elements, wiring);

    if (args.f_points < 2 || !(args.f_stop > args.f_start)) {
        throw std::domain_error("frequency sweep needs f_stop > f_start and >= 2 points");
    }

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    out << "frequency_hz,z_mag_ohm,z_phase_deg,gain,phase_rad,group_delay_s\n";
    for (std::size_t i = 0; i < args.f_points; ++i) {
        const double f = args.f_start + (args.f_stop - args.f_start) *
                                            static_cast<double>(i) /
                                            static_cast<double>(args.f_points - 1);
        const std::complex<double> z = array_impedance(array, f, args.drive);
        const FrequencyResponse fr = frequency_response(array, f);
        out << fmt6(f) << "," << fmt6(std::abs(z)) << ","
            << fmt6(std::arg(z) * 180.0 / PI) << "," << fmt6(fr.gain)
            << "," << fmt6(fr.phase) << "," << fmt6(fr.group_delay)
            << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ link ---

struct LinkArgs {
    std::string config_path;
    std::string out_path;
    double medium_ratio = 0.0;
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    double eps_a = 1.0;
    double eps_b = 80.0;
    int n_tx = 1;
    int n_rx = 1;
    double coupling_efficiency = 1.0;
    CLI::Option* medium_ratio_opt = nullptr;
    CLI::Option* lambda_a_opt = nullptr;
    CLI::Option* n_tx_opt = nullptr;
    CLI::Option* n_rx_opt = nullptr;
};

int run_link(const LinkArgs& args) {
    const ConfigFile config = load_config(args.config_path);
    double ratio = 1.0;
    if (args.lambda_a_opt->count() > 0) {
        ratio = radiation_resistance_ratio_media(args.lambda_a, args.lambda_b, args.eps_a,
                                                 args.eps_b);
    }
    if (args.medium_ratio_opt->count() > 0) {
        ratio = args.medium_ratio;
    }
    const int n_tx = static_cast<int>(resolve(args.n_tx_opt, args.n_tx, config,
                                              "array.n_tx", args.n_tx));
    const int n_rx = static_cast<int>(resolve(args.n_rx_opt, args.n_rx, config,
                                              "array.n_rx", args.n_rx));
    const LinkScaling scaling = total_link_budget(ratio, n_tx, n_rx,
                                                  args.coupling_efficiency);

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    out << "quantity,value\n";
    print_kv(out, "rad_resistance_ratio", scaling.rad_resistance_ratio);
    print_kv(out, "tx_array_power_gain", scaling.tx_array_power_gain);
    print_kv(out, "rx_array_gain", scaling.rx_array_gain);
    print_kv(out, "total_link_factor", scaling.total_link_factor);
    print_kv(out, "total_link_db", scaling.total_link_db);
    print_kv(out, "total_link_db_power_convention",
             10.0 * std::log10(scaling.total_link_factor));
    return 0;
}

// ------------------------------------------------------------------- fit ---

struct FitArgs {
    std::string range_path;
    std::string out_path;
    std::vector<double> breakpoints;
    std::vector<double> predict;
    bool exclude_flagged = false;
};

int run_fit(const FitArgs& args) {
    const std::vector<RangeSample> samples = parse_range(args.range_path);
    std::vector<bool> exclude(samples.size(), false);
    if (args.exclude_flagged) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            exclude[i] = samples[i].label != RANGE_FLAG_OK;
        }
    }
    const PathLossModel model = fit_path_loss(samples, args.breakpoints, exclude);

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    out << "segment,r_min_m,r_max_m,exponent,level_at_rmin_db\n";
    for (std::size_t k = 0; k < model.segments.size(); ++k) {
        const PathLossSegment& s = model.segments[k];
        out << k << "," << fmt6(s.r_min) << "," << fmt6(s.r_max) << ","
            << fmt6(s.exponent) << "," << fmt6(s.level_at_rmin) << "\n";
    }
    if (!args.predict.empty()) {
        out << "distance_m,predicted_snr_db,extrapolated\n";
        for (double r : args.predict) {
            const SnrPrediction p = predict_snr(model, r);
            out << fmt6(r) << "," << fmt6(p.snr_db) << ","
                << (p.extrapolated ? 1 : 0) << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- ber ---

struct BerArgs {
    std::string config_path;
    std::string out_path;
    std::vector<std::string> spectra;
    std::vector<double> ebn0_db{4.0, 7.0, 10.0};
    std::vector<double> delta_f_list;
    double center = 34629.26;
    double delta_f = 800.0;
    double rb = 800.0;
    double sample_rate = 8000.0;
    double target_ber = 1e-3;
    bool monte_carlo = false;
    bool antenna_filter = false;
    double filter_f0 = 35.5e3;
    double filter_q = 200.0;
    std::uint64_t n_bits = 200000;
    std::uint64_t seed = 1;
    CLI::Option* center_opt = nullptr;
    CLI::Option* delta_f_opt = nullptr;
    CLI::Option* rb_opt = nullptr;
    CLI::Option* sample_rate_opt = nullptr;
    CLI::Option* filter_f0_opt = nullptr;
    CLI::Option* filter_q_opt = nullptr;
};

int run_ber(const BerArgs& args) {
    const ConfigFile config = load_config(args.config_path);
    const double center = resolve(args.center_opt, args.center, config, "modem.center_hz",
                                  args.center);
    const double delta_f = resolve(args.delta_f_opt, args.delta_f, config,
                                   "modem.delta_f_hz", args.delta_f);
    const double rb = resolve(args.rb_opt, args.rb, config, "modem.rb_bps", args.rb);
    const double sample_rate = resolve(args.sample_rate_opt, args.sample_rate, config,
                                       "modem.sample_rate", args.sample_rate);

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();

    if (!args.spectra.empty()) {
        // measured-spectrum pipeline: per file and tone spacing, BER at the
        // maximum (orthogonality-capped) rate from the weaker tone's SNR
        const std::vector<double> spacings =
            args.delta_f_list.empty() ? std::vector<double>{delta_f} : args.delta_f_list;
        out << "file,distance_m,delta_f_hz,snr_min_db,max_bitrate_bps,capped,"
               "ber_at_max_rate\n";
        for (const std::string& path : args.spectra) {
            const SpectrumFile file = read_spectrum_file(path);
            const SnrSpectrum spectrum = to_snr_spectrum(file);
            const double distance = file.metadata_number("distance_m", -1.0);
            for (double spacing : spacings) {
                const double snr = std::min(
                    interpolate_snr(spectrum, center - 0.5 * spacing),
                    interpolate_snr(spectrum, center + 0.5 * spacing));
                const BitrateResult rate = max_bitrate_for_ber(spectrum, args.target_ber,
                                                               spacing, center);
                out << path << "," << fmt6(distance) << ","
                    << fmt6(spacing) << ","
                    << fmt6(10.0 * std::log10(snr)) << ","
                    << fmt6(rate.bit_rate) << "," << (rate.capped ? 1 : 0) << ","
                    << fmt6(ber_closed_form(snr, spacing, spacing)) << "\n";
            }
        }
        return 0;
    }

    BfskConfig modem;
    modem.center_frequency = center;
    modem.tone_spacing = delta_f;
    modem.bit_rate = rb;
    modem.sample_rate = sample_rate;
    modem.validate();

    ArraySpec filter;
    if (args.antenna_filter) {
        Resonator element;
        element.f0 = resolve(args.filter_f0_opt, args.filter_f0, config, "antenna.f0_hz",
                             args.filter_f0);
        element.quality_q = resolve(args.filter_q_opt, args.filter_q, config, "antenna.q",
                                    args.filter_q);
        filter = make_array(element, 1, Wiring::Series);
    }

    out << "ebn0_db,snr_db,ber_closed";
    if (args.monte_carlo) out << ",ber_mc,mc_errors,mc_bits,wilson_lo,wilson_hi";
    out << "\n";
    for (double ebn0_db : args.ebn0_db) {
        // snr referenced to noise in bandwidth delta_f: Eb/N0 = snr * Rb/delta_f
        const double snr_db = ebn0_db - 10.0 * std::log10(rb / delta_f);
        const double snr = std::pow(10.0, snr_db / 10.0);
        out << fmt6(ebn0_db) << "," << fmt6(snr_db) << ","
            << fmt6(ber_closed_form(snr, rb, delta_f));
        if (args.monte_carlo) {
            const BerResult mc =
                ber_monte_carlo(modem, snr_db, args.n_bits, args.seed,
                                args.antenna_filter ? &filter : nullptr);
            out << "," << fmt6(mc.ber_estimate) << "," << mc.bit_errors << ","
                << mc.bits_sent << "," << fmt6(mc.wilson_lo) << ","
                << fmt6(mc.wilson_hi);
        }
        out << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- capacity ---

struct CapacityArgs {
    std::string spectrum_path;
    std::string out_path;
    double noise_floor_dbv = DEFAULT_NOISE_FLOOR_DBV;
    std::vector<double> band;
    CLI::Option* noise_floor_opt = nullptr;
};

int run_capacity(const CapacityArgs& args) {
    SpectrumFile file = read_spectrum_file(args.spectrum_path);
    if (args.noise_floor_opt->count() > 0) {
        bool replaced = false;
        for (auto& [key, value] : file.metadata) {
            if (key == "noise_floor_dbv") {
                value = fmt6(args.noise_floor_dbv);
                replaced = true;
            }
        }
        if (!replaced) {
            file.metadata.emplace_back("noise_floor_dbv",
                                       fmt6(args.noise_floor_dbv));
        }
    }
    const SnrSpectrum spectrum = to_snr_spectrum(file);

    OutputTarget target;
    target.open(args.out_path);
    std::ostream& out = target.out();
    if (!args.band.empty()) {
        if (args.band.size() != 2) {
            throw std::domain_error("--band takes exactly two frequencies");
        }
        out << "f_lo_hz,f_hi_hz,capacity_bits_per_s\n";
        out << fmt6(args.band[0]) << "," << fmt6(args.band[1]) << ","
            << fmt6(capacity_band(spectrum, args.band[0], args.band[1])) << "\n";
        return 0;
    }
    out << "frequency_hz,cumulative_bits_per_s\n";
    for (const CapacityPoint& p : capacity_cumulative(spectrum)) {
        out << fmt6(p.frequency) << "," << fmt6(p.cumulative_bits_per_s)
            << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- synth ---

struct SynthArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 1;
    std::vector<double> exponents{4.0, 1.0};
    std::vector<double> breakpoints{15.0};
    double r_min = 1.5;
    double r_max = 730.0;
    double level_db = 62.0;
    double noise_floor_dbv = DEFAULT_NOISE_FLOOR_DBV;
    int n_per_segment = 48;
    double jitter_db = 1.0;
    std::vector<std::string> anomalies;
    double f_start = 31000.0;
    double f_stop = 41000.0;
    double f_step = 25.0;
};

SynthAnomaly parse_anomaly(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ParseError("anomaly '" + text + "' must be distance:offset_db:flag");
    }
    SynthAnomaly a;
    a.distance = std::stod(text.substr(0, c1));
    a.offset_db = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    a.flag = text.substr(c2 + 1);
    return a;
}

int run_synth(const SynthArgs& args) {
    const ConfigFile config = load_config(args.config_path);
    if (args.exponents.size() != args.breakpoints.size() + 1) {
        throw std::domain_error("need exactly one more exponent than breakpoints");
    }

    PathLossModel model;
    model.noise_floor_db = args.noise_floor_dbv;
    std::vector<double> bounds{args.r_min};
    for (double bp : args.breakpoints) bounds.push_back(bp);
    bounds.push_back(args.r_max);
    double level = args.level_db;
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        if (!(bounds[k + 1] > bounds[k])) {
            throw std::domain_error("breakpoints must increase inside [r-min, r-max]");
        }
        model.segments.push_back(
            PathLossSegment{bounds[k], bounds[k + 1], args.exponents[k], level});
        level -= 10.0 * args.exponents[k] * std::log10(bounds[k + 1] / bounds[k]);
    }

    SynthOptions options;
    options.samples_per_segment = args.n_per_segment;
    options.jitter_sigma_db = args.jitter_db;
    options.spectrum_f_start = args.f_start;
    options.spectrum_f_stop = args.f_stop;
    options.spectrum_delta_f = args.f_step;
    for (const std::string& text : args.anomalies) {
        options.anomalies.push_back(parse_anomaly(text));
    }

    const SynthDataset dataset = synth_dataset(model, config, args.seed, options);
    for (const std::string& path : write_synth_dataset(dataset, args.out_dir)) {
        std::cout << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis toolkit for VLF/LF electromagnetic links in conductive water"};
    app.require_subcommand(1);

    MediumArgs medium_args;
    auto* medium_cmd = app.add_subcommand("medium", "propagation constants and field regions");
    medium_args.conductivity_opt =
        medium_cmd->add_option("--conductivity", medium_args.conductivity, "S/m");
    medium_cmd->add_option("--frequency", medium_args.frequency, "Hz");
    medium_cmd->add_option("--permeability", medium_args.permeability, "H/m");
    medium_cmd->add_option("--rel-permittivity", medium_args.rel_permittivity, "");
    medium_cmd->add_option("--config", medium_args.config_path, "config file");
    medium_cmd->add_option("--out", medium_args.out_path, "output CSV path");

    ResonanceArgs resonance_args;
    auto* resonance_cmd =
        app.add_subcommand("resonance", "laminate resonance and ME coefficient");
    resonance_cmd->add_option("--length", resonance_args.spec.length, "m");
    resonance_cmd->add_option("--young-pzt", resonance_args.spec.young_pzt, "Pa");
    resonance_cmd->add_option("--young-metglas", resonance_args.spec.young_metglas, "Pa");
    resonance_cmd->add_option("--vol-frac-pzt", resonance_args.spec.vol_frac_pzt, "");
    resonance_cmd->add_option("--vol-frac-metglas", resonance_args.spec.vol_frac_metglas, "");
    resonance_cmd->add_option("--density-pzt", resonance_args.spec.density_pzt, "kg/m^3");
    resonance_cmd->add_option("--density-metglas", resonance_args.spec.density_metglas,
                              "kg/m^3");
    resonance_cmd->add_option("--thickness", resonance_args.spec.piezo_thickness, "m");
    resonance_args.delta_v_opt =
        resonance_cmd->add_option("--delta-v", resonance_args.delta_v, "V");
    resonance_cmd->add_option("--delta-h", resonance_args.delta_h, "A/m");
    resonance_cmd->add_option("--out", resonance_args.out_path, "output CSV path");

    ImpedanceArgs impedance_args;
    auto* impedance_cmd = app.add_subcommand("impedance", "array impedance sweep");
    impedance_args.f0_opt = impedance_cmd->add_option("--f0", impedance_args.base.f0, "Hz");
    impedance_args.q_opt = impedance_cmd->add_option("--q", impedance_args.base.quality_q, "");
    impedance_cmd->add_option("--r-res", impedance_args.base.r_resonance, "ohm");
    impedance_cmd->add_option("--c-static", impedance_args.base.c_static, "F");
    impedance_cmd->add_option("--softening", impedance_args.base.softening_coeff, "Hz/V^2");
    impedance_cmd->add_option("--drive", impedance_args.drive, "V");
    impedance_cmd->add_option("--n", impedance_args.n_elements, "element count");
    impedance_cmd->add_option("--wiring", impedance_args.wiring, "series|parallel")
        ->check(CLI::IsMember({"series", "parallel"}));
    impedance_cmd->add_option("--f0-jitter", impedance_args.f0_jitter, "relative");
    impedance_cmd->add_option("--r-jitter", impedance_args.r_jitter, "relative");
    impedance_cmd->add_option("--seed", impedance_args.seed, "");
    impedance_cmd->add_option("--f-start", impedance_args.f_start, "Hz");
    impedance_cmd->add_option("--f-stop", impedance_args.f_stop, "Hz");
    impedance_cmd->add_option("--f-points", impedance_args.f_points, "");
    impedance_cmd->add_option("--config", impedance_args.config_path, "config file");
    impedance_cmd->add_option("--out", impedance_args.out_path, "output CSV path");

    LinkArgs link_args;
    auto* link_cmd = app.add_subcommand("link", "array link-budget scaling");
    link_args.medium_ratio_opt =
        link_cmd->add_option("--medium-ratio", link_args.medium_ratio,
                             "radiation-resistance ratio between media");
    link_args.lambda_a_opt = link_cmd->add_option("--lambda-a", link_args.lambda_a, "m");
    link_cmd->add_option("--lambda-b", link_args.lambda_b, "m");
    link_cmd->add_option("--eps-a", link_args.eps_a, "");
    link_cmd->add_option("--eps-b", link_args.eps_b, "");
    link_args.n_tx_opt = link_cmd->add_option("--n-tx", link_args.n_tx, "");
    link_args.n_rx_opt = link_cmd->add_option("--n-rx", link_args.n_rx, "");
    link_cmd->add_option("--coupling-efficiency", link_args.coupling_efficiency, "(0,1]");
    link_cmd->add_option("--config", link_args.config_path, "config file");
    link_cmd->add_option("--out", link_args.out_path, "output CSV path");

    FitArgs fit_args;
    auto* fit_cmd = app.add_subcommand("fit", "piecewise path-loss fit");
    fit_cmd->add_option("--range", fit_args.range_path, "range CSV")->required();
    fit_cmd->add_option("--breakpoints", fit_args.breakpoints, "interior breakpoints, m")
        ->delimiter(',');
    fit_cmd->add_option("--predict", fit_args.predict, "distances to evaluate, m")
        ->delimiter(',');
    fit_cmd->add_flag("--exclude-flagged", fit_args.exclude_flagged,
                      "mask rows whose flag is not 'ok'");
    fit_cmd->add_option("--out", fit_args.out_path, "output CSV path");

    BerArgs ber_args;
    auto* ber_cmd = app.add_subcommand("ber", "BFSK bit-error-rate analysis");
    ber_cmd->add_option("--spectrum", ber_args.spectra, "spectrum CSV (repeatable)");
    ber_cmd->add_option("--ebn0-db", ber_args.ebn0_db, "Eb/N0 sweep, dB")->delimiter(',');
    ber_cmd->add_option("--delta-f-list", ber_args.delta_f_list,
                        "tone spacings for spectrum mode, Hz")
        ->delimiter(',');
    ber_args.center_opt = ber_cmd->add_option("--center", ber_args.center, "Hz");
    ber_args.delta_f_opt = ber_cmd->add_option("--delta-f", ber_args.delta_f, "Hz");
    ber_args.rb_opt = ber_cmd->add_option("--rb", ber_args.rb, "bits/s");
    ber_args.sample_rate_opt =
        ber_cmd->add_option("--sample-rate", ber_args.sample_rate, "samples/s");
    ber_cmd->add_option("--target-ber", ber_args.target_ber, "for max-bitrate solve");
    ber_cmd->add_flag("--monte-carlo", ber_args.monte_carlo, "run waveform simulation");
    ber_cmd->add_flag("--antenna-filter", ber_args.antenna_filter,
                      "pass the waveform through the antenna response on tx and rx");
    ber_args.filter_f0_opt = ber_cmd->add_option("--filter-f0", ber_args.filter_f0, "Hz");
    ber_args.filter_q_opt = ber_cmd->add_option("--filter-q", ber_args.filter_q, "");
    ber_cmd->add_option("--n-bits", ber_args.n_bits, "");
    ber_cmd->add_option("--seed", ber_args.seed, "");
    ber_cmd->add_option("--config", ber_args.config_path, "config file");
    ber_cmd->add_option("--out", ber_args.out_path, "output CSV path");

    CapacityArgs capacity_args;
    auto* capacity_cmd = app.add_subcommand("capacity", "Shannon capacity from a spectrum");
    capacity_cmd->add_option("--spectrum", capacity_args.spectrum_path, "spectrum CSV")
        ->required();
    capacity_args.noise_floor_opt = capacity_cmd->add_option(
        "--noise-floor-dbv", capacity_args.noise_floor_dbv, "override metadata floor");
    capacity_cmd->add_option("--band", capacity_args.band, "f_lo f_hi")->expected(2);
    capacity_cmd->add_option("--out", capacity_args.out_path, "output CSV path");

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic reference dataset");
    synth_cmd->add_option("--out-dir", synth_args.out_dir, "output directory")->required();
    synth_cmd->add_option("--seed", synth_args.seed, "");
    synth_cmd->add_option("--exponents", synth_args.exponents, "per-segment decay exponents")
        ->delimiter(',');
    synth_cmd->add_option("--breakpoints", synth_args.breakpoints, "interior breakpoints, m")
        ->delimiter(',');
    synth_cmd->add_option("--r-min", synth_args.r_min, "m");
    synth_cmd->add_option("--r-max", synth_args.r_max, "m");
    synth_cmd->add_option("--level-db", synth_args.level_db, "SNR at r-min, dB");
    synth_cmd->add_option("--noise-floor-dbv", synth_args.noise_floor_dbv, "");
    synth_cmd->add_option("--n-per-segment", synth_args.n_per_segment, "");
    synth_cmd->add_option("--jitter-db", synth_args.jitter_db, "level jitter sigma");
    synth_cmd->add_option("--anomaly", synth_args.anomalies,
                          "extra row, distance:offset_db:flag (repeatable)");
    synth_cmd->add_option("--f-start", synth_args.f_start, "Hz");
    synth_cmd->add_option("--f-stop", synth_args.f_stop, "Hz");
    synth_cmd->add_option("--f-step", synth_args.f_step, "Hz");
    synth_cmd->add_option("--config", synth_args.config_path, "config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*medium_cmd) return run_medium(medium_args);
        if (*resonance_cmd) return run_resonance(resonance_args);
        if (*impedance_cmd) return run_impedance(impedance_args);
        if (*link_cmd) return run_link(link_args);
        if (*fit_cmd) return run_fit(fit_args);
        if (*ber_cmd) return run_ber(ber_args);
        if (*capacity_cmd) return run_capacity(capacity_args);
        if (*synth_cmd) return run_synth(synth_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
