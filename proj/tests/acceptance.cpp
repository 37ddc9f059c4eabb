// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "uwlink/antenna.hpp"
#include "uwlink/bfsk.hpp"
#include "uwlink/capacity.hpp"
#include "uwlink/constants.hpp"
#include "uwlink/link_budget.hpp"
#include "uwlink/medium.hpp"
#include "uwlink/rng.hpp"

using namespace uwlink;

namespace {

int failures = 0;

void report(const char* criterion, bool pass, const std::string& detail) {
    std::printf("%s  %s (%s)\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

bool within_rel(double value, double target, double rel) {
    return std::abs(value - target) <= rel * std::abs(target);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// --- 1, 2, 3: propagation ---------------------------------------------------

void criterion_1_freshwater_wavelength() {
    const ConductiveMedium fresh = make_water(0.0097, "freshwater");
    const double l36 = wavelength(fresh, 36e3);
    const double l31 = wavelength(fresh, 31e3);
    const double l41 = wavelength(fresh, 41e3);
    const bool pass = within_rel(l36, 170.0, 0.01) && within_rel(l31, 182.0, 0.01) &&
                      within_rel(l41, 158.0, 0.01);
    report("1. freshwater wavelengths 170/182/158 m within 1%", pass,
           fmt(l36) + " / " + fmt(l31) + " / " + fmt(l41) + " m");
}

void criterion_2_saltwater_regions() {
    const ConductiveMedium salt = make_water(4.818, "saltwater");
    const double lambda = wavelength(salt, 36e3);
    const FieldRegions regions = field_regions(salt, 36e3);
    const bool pass = within_rel(lambda, 7.59, 0.01) &&
                      within_rel(regions.reactive_near_limit, 1.21, 0.01) &&
                      within_rel(regions.radiative_near_limit, 7.59, 0.01) &&
                      within_rel(regions.transition_limit, 15.19, 0.01);
    report("2. saltwater wavelength 7.59 m and regions (1.21, 7.59, 15.19) m within 1%",
           pass,
           fmt(lambda) + " m; regions " + fmt(regions.reactive_near_limit) + ", " +
               fmt(regions.radiative_near_limit) + ", " + fmt(regions.transition_limit));
}

void criterion_3_attenuation_envelope() {
    const ConductiveMedium salt = make_water(4.818, "saltwater");
    double lo = 1e9;
    double hi = -1e9;
    for (int i = 0; i <= 100; ++i) {
        const double f = 31e3 + (41e3 - 31e3) * i / 100.0;
        const double a = attenuation_db_per_m(salt, f);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    const bool pass = lo >= 1.0 && hi <= 10.0;
    report("3. saltwater attenuation stays inside 1-10 dB/m over 31-41 kHz", pass,
           "min " + fmt(lo) + ", max " + fmt(hi) + " dB/m");
}

// --- 4: laminate resonance ---------------------------------------------------

void criterion_4_resonance() {
    const double fr = resonance_frequency(pzt5j_metglas_sample());
    const bool pass = within_rel(fr, 34.4e3, 0.005) && within_rel(fr, 35e3, 0.03);
    report("4. sample laminate resonance 34.4 kHz (0.5%) and ~35 kHz (3%)", pass,
           fmt(fr) + " Hz");
}

// --- 5: link scaling ----------------------------------------------------------

void criterion_5_link_scaling() {
    const ArrayGains gains = array_gains(15, 15);
    const LinkScaling scaling = total_link_budget(267.0, 15, 15);
    const double lambda_fresh = wavelength(make_water(0.0097), 36e3);
    const double lambda_salt = wavelength(make_water(5.0), 36e3);
    const double media_ratio =
        radiation_resistance_ratio_media(lambda_fresh, lambda_salt, 80.0, 80.0);
    const bool pass = gains.tx_power_gain == 225.0 && gains.rx_gain == 15.0 &&
                      gains.combined == 3375.0 && scaling.total_link_factor == 901125.0 &&
                      std::abs(scaling.total_link_db - 119.1) <= 0.1 &&
                      within_rel(media_ratio, 515.5, 0.001);
    report("5. array gains (225, 15, 3375), factor 901125 at 119.1 dB, media ratio 515.5",
           pass,
           "factor " + fmt(scaling.total_link_factor) + ", " + fmt(scaling.total_link_db) +
               " dB, ratio " + fmt(media_ratio));
}

// --- 6, 7, 8: modem ------------------------------------------------------------

BfskConfig modem_config() {
    BfskConfig c;
    c.center_frequency = 2800.0;
    c.tone_spacing = 800.0;
    c.bit_rate = 800.0;
    c.sample_rate = 8000.0;
    return c;
}

void criterion_6_monte_carlo_vs_closed_form() {
    const BfskConfig config = modem_config();  // delta_f = R_b
    std::string detail;
    bool pass = true;
    for (double ebn0_db : {4.0, 7.0, 10.0}) {
        const double closed =
            ber_closed_form(std::pow(10.0, ebn0_db / 10.0), config.bit_rate,
                            config.tone_spacing);
        int hits = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const BerResult mc = ber_monte_carlo(config, ebn0_db, 200000, seed);
            if (mc.wilson_lo <= closed && closed <= mc.wilson_hi) ++hits;
        }
        if (hits < 9) pass = false;
        detail += fmt(ebn0_db) + " dB: " + std::to_string(hits) + "/10  ";
    }
    report("6. Monte Carlo Wilson intervals bracket 0.5*exp(-Eb/2N0) in >=9/10 seeds",
           pass, detail);
}

void criterion_7_noiseless_loopback() {
    bool pass = true;
    std::string detail;
    for (int k : {1, 2, 3}) {
        BfskConfig c;
        c.center_frequency = 3000.0;
        c.bit_rate = 800.0;
        c.tone_spacing = 800.0 * k;
        c.sample_rate = 12000.0;
        Rng rng(1000 + static_cast<std::uint64_t>(k));
        std::vector<std::uint8_t> bits(10000);
        for (auto& b : bits) b = rng.bernoulli() ? 1 : 0;
        const DemodResult out = demodulate_noncoherent(c, modulate(c, bits));
        std::uint64_t errors = out.bits.size() == bits.size() ? 0 : 10000;
        for (std::size_t i = 0; i < out.bits.size() && i < bits.size(); ++i) {
            if (out.bits[i] != bits[i]) ++errors;
        }
        if (errors != 0) pass = false;
        detail += "df=" + std::to_string(k) + "Rb: " + std::to_string(errors) + " err  ";
    }
    report("7. noiseless loopback is exact over 10^4 bits for df in {Rb, 2Rb, 3Rb}", pass,
           detail);
}

void criterion_8_phase_insensitivity() {
    const BfskConfig c = modem_config();
    Rng rng(77);
    std::vector<std::uint8_t> bits(1000);
    for (auto& b : bits) b = rng.bernoulli() ? 1 : 0;
    const DemodResult reference = demodulate_noncoherent(c, modulate(c, bits));
    bool pass = true;
    for (double offset : {PI / 7.0, PI / 3.0, 1.0}) {
        const DemodResult shifted = demodulate_noncoherent(c, modulate(c, bits, offset));
        if (shifted.bits != reference.bits) pass = false;
    }
    report("8. demodulator decisions are identical under phase offsets {pi/7, pi/3, 1.0}",
           pass, "10^3-bit runs");
}

// --- 9: capacity -----------------------------------------------------------------

void criterion_9_capacity() {
    const SnrSpectrum uniform =
        make_spectrum(30000.0, 1.0, std::vector<double>(10000, 15.0), 1.0);
    const double total = capacity_cumulative(uniform).back().cumulative_bits_per_s;
    bool pass = total == 40000.0;

    // additivity over adjacent bands
    const double first = capacity_band(uniform, 30000.0, 35000.0);
    const double second = capacity_band(uniform, 35000.0, 40000.0);
    pass = pass && within_rel(first + second, total, 1e-12);

    // non-decreasing cumulative curves on random spectra
    std::mt19937_64 gen(12345);
    auto uniform01 = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };
    bool monotone = true;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 10 + static_cast<std::size_t>(uniform01() * 150);
        SnrSpectrum s;
        s.start_frequency = 31000.0;
        s.delta_f = 0.5 + 50.0 * uniform01();
        s.signal_power.resize(n);
        s.noise_power.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.signal_power[i] = 50.0 * uniform01();
            s.noise_power[i] = 0.1 + uniform01();
        }
        double previous = 0.0;
        for (const CapacityPoint& p : capacity_cumulative(s)) {
            if (p.cumulative_bits_per_s < previous) monotone = false;
            previous = p.cumulative_bits_per_s;
        }
    }
    pass = pass && monotone;
    report("9. capacity: 40000 bits/s exact, band additivity, monotone cumulative curves",
           pass, "total " + fmt(total) + " bits/s, monotone " + (monotone ? "yes" : "no"));
}

// --- 10: path-loss closed loop ------------------------------------------------------

std::vector<RangeSample> two_segment_sweep(double jitter_sigma_db, std::uint64_t seed) {
    // exponents 4 then 1, breakpoint 15 m; levels chained for continuity
    const double level_at_2 = 62.0;
    std::vector<RangeSample> samples;
    Rng rng(seed);
    auto push = [&](double r_lo, double r_hi, int n, bool include_end, double exponent,
                    double level_at_lo) {
        for (int i = 0; i < n; ++i) {
            const double frac =
                static_cast<double>(i) / static_cast<double>(include_end ? n - 1 : n);
            const double r = r_lo * std::pow(r_hi / r_lo, frac);
            const double snr = level_at_lo - 10.0 * exponent * std::log10(r / r_lo) +
                               (jitter_sigma_db > 0.0 ? jitter_sigma_db * rng.normal() : 0.0);
            samples.push_back(RangeSample{r, snr, 34629.26, "ok"});
        }
    };
    push(2.0, 15.0, 32, false, 4.0, level_at_2);
    const double level_at_15 = level_at_2 - 40.0 * std::log10(15.0 / 2.0);
    push(15.0, 730.0, 32, true, 1.0, level_at_15);
    return samples;
}

void criterion_10_path_loss_loop() {
    const PathLossModel clean = fit_path_loss(two_segment_sweep(0.0, 0), {15.0});
    const bool clean_ok = within_rel(clean.segments[0].exponent, 4.0, 0.05) &&
                          within_rel(clean.segments[1].exponent, 1.0, 0.05);

    bool jitter_ok = true;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PathLossModel fitted = fit_path_loss(two_segment_sweep(1.0, seed), {15.0});
        const double err0 = std::abs(fitted.segments[0].exponent - 4.0) / 4.0;
        const double err1 = std::abs(fitted.segments[1].exponent - 1.0) / 1.0;
        worst = std::max({worst, err0, err1});
        if (err0 > 0.15 || err1 > 0.15) jitter_ok = false;
    }
    report("10. path-loss fit recovers (4, 1): noiseless within 5%, 1 dB jitter within 15%",
           clean_ok && jitter_ok,
           "noiseless (" + fmt(clean.segments[0].exponent) + ", " +
               fmt(clean.segments[1].exponent) + "), worst jittered error " +
               fmt(100.0 * worst) + "%");
}

// --- 11: impedance composition -------------------------------------------------------

double dip_frequency(const ArraySpec& array, double drive) {
    double best_f = 31e3;
    double best = 1e300;
    for (int i = 0; i <= 4000; ++i) {
        const double f = 31e3 + (41e3 - 31e3) * i / 4000.0;
        const double mag = std::abs(array_impedance(array, f, drive));
        if (mag < best) {
            best = mag;
            best_f = f;
        }
    }
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = best_f - 2.5;
    double b = best_f + 2.5;
    while (b - a > 1e-4) {
        const double c = b - gr * (b - a);
        const double d = a + gr * (b - a);
        if (std::abs(array_impedance(array, c, drive)) <
            std::abs(array_impedance(array, d, drive))) {
            b = d;
        } else {
            a = c;
        }
    }
    return (a + b) / 2.0;
}

void criterion_11_impedance_composition() {
    std::mt19937_64 gen(777);
    auto uniform01 = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };
    double worst_rel = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        ArraySpec arr;
        arr.wiring = trial % 2 == 0 ? Wiring::Series : Wiring::Parallel;
        for (int i = 0; i < 15; ++i) {
            Resonator r;
            r.f0 = 34e3 + 3e3 * uniform01();
            r.quality_q = 50.0 + 350.0 * uniform01();
            r.r_resonance = 100.0 + 4900.0 * uniform01();
            r.c_static = 0.5e-9 + 4.5e-9 * uniform01();
            arr.elements.push_back(r);
        }
        for (double f = 31e3; f <= 41e3; f += 100.0) {
            std::complex<double> expected{0.0, 0.0};
            if (arr.wiring == Wiring::Series) {
                for (const Resonator& e : arr.elements) expected += impedance(e, f);
            } else {
                for (const Resonator& e : arr.elements) expected += 1.0 / impedance(e, f);
                expected = 1.0 / expected;
            }
            const std::complex<double> got = array_impedance(arr, f);
            worst_rel = std::max(worst_rel, std::abs(got - expected) / std::abs(expected));
        }
    }
    const bool composition_ok = worst_rel <= 1e-9;

    Resonator soft;
    soft.softening_coeff = -15.0;
    const ArraySpec arr = make_array(soft, 15, Wiring::Parallel);
    const double amplitude = 2.0;
    const double f_0 = dip_frequency(arr, 0.0);
    const double f_a = dip_frequency(arr, amplitude);
    const double f_2a = dip_frequency(arr, 2.0 * amplitude);
    const bool softening_ok = f_a < f_0 && f_2a < f_a;

    report("11. series/parallel composition exact to 1e-9; softening dip moves down "
           "across drives {0, A, 2A}",
           composition_ok && softening_ok,
           "worst composition error " + fmt(worst_rel) + "; dips " + fmt(f_0) + " > " +
               fmt(f_a) + " > " + fmt(f_2a) + " Hz");
}

}  // namespace

int main() {
    criterion_1_freshwater_wavelength();
    criterion_2_saltwater_regions();
    criterion_3_attenuation_envelope();
    criterion_4_resonance();
    criterion_5_link_scaling();
    criterion_6_monte_carlo_vs_closed_form();
    criterion_7_noiseless_loopback();
    criterion_8_phase_insensitivity();
    criterion_9_capacity();
    criterion_10_path_loss_loop();
    criterion_11_impedance_composition();

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
