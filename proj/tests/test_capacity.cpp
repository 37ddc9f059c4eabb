#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "uwlink/capacity.hpp"

using namespace uwlink;

namespace {

SnrSpectrum uniform_snr(double snr, std::size_t n_bins, double delta_f = 1.0,
                        double start = 30000.0) {
    return make_spectrum(start, delta_f, std::vector<double>(n_bins, snr), 1.0);
}

double uniform(std::mt19937_64& gen) { return (gen() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("zero signal gives a zero curve") {
    const auto curve = capacity_cumulative(uniform_snr(0.0, 100));
    for (const CapacityPoint& p : curve) CHECK(p.cumulative_bits_per_s == 0.0);
}

TEST_CASE("uniform S/N of 15 over 10 kHz yields 40000 bits/s") {
    const auto curve = capacity_cumulative(uniform_snr(15.0, 10000));
    CHECK(curve.back().cumulative_bits_per_s == doctest::Approx(40000.0).epsilon(1e-12));
    CHECK(curve.back().frequency == doctest::Approx(40000.0).epsilon(1e-12));
}

TEST_CASE("capacity is additive over adjacent halves") {
    std::mt19937_64 gen(5);
    std::vector<double> signal(200);
    for (auto& s : signal) s = 30.0 * uniform(gen);
    const SnrSpectrum whole = make_spectrum(31000.0, 50.0, signal, 1.0);

    const double half_edge = 31000.0 + 50.0 * 100;
    const double total = capacity_band(whole, 31000.0, whole.band_edge());
    const double first = capacity_band(whole, 31000.0, half_edge);
    const double second = capacity_band(whole, half_edge, whole.band_edge());
    CHECK(total == doctest::Approx(first + second).epsilon(1e-12));
    CHECK(total == doctest::Approx(capacity_cumulative(whole).back().cumulative_bits_per_s)
                       .epsilon(1e-12));
}

TEST_CASE("band capacity arithmetic") {
    const SnrSpectrum s = uniform_snr(3.0, 4000);
    // 2 kHz sub-band at S/N = 3: 2000 * log2(4)
    CHECK(capacity_band(s, 30500.0, 32500.0) == doctest::Approx(4000.0).epsilon(1e-12));
    CHECK(capacity_band(s, 31000.0, 31000.0) == 0.0);
    CHECK_THROWS_AS(capacity_band(s, 29000.0, 31000.0), std::domain_error);
    CHECK_THROWS_AS(capacity_band(s, 31000.0, 99000.0), std::domain_error);
    CHECK_THROWS_AS(capacity_band(s, 32000.0, 31000.0), std::domain_error);
}

TEST_CASE("snr_from_levels") {
    CHECK(snr_from_levels(-91.0, -91.0) == 1.0);
    CHECK(snr_from_levels(-71.0, -91.0) == doctest::Approx(100.0).epsilon(1e-12));
    // a bin sitting exactly on the floor contributes log2(2) per Hz
    const SnrSpectrum s = make_spectrum(31000.0, 1.0,
                                        std::vector<double>(10, snr_from_levels(-91.0, -91.0)),
                                        1.0);
    const auto curve = capacity_cumulative(s);
    CHECK(curve.back().cumulative_bits_per_s == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("spectrum_from_dbv clips bins below the noise floor") {
    const SnrSpectrum s = spectrum_from_dbv(31000.0, 1.0, {-91.0, -95.0, -71.0}, -91.0);
    CHECK(s.signal_power[0] / s.noise_power[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.signal_power[1] == 0.0);
    CHECK(s.signal_power[2] / s.noise_power[2] == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("cumulative curve is non-decreasing on random spectra") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 10 + static_cast<std::size_t>(uniform(gen) * 190);
        std::vector<double> signal(n);
        std::vector<double> noise(n);
        for (std::size_t i = 0; i < n; ++i) {
            signal[i] = 100.0 * uniform(gen);
            noise[i] = 0.1 + uniform(gen);
        }
        SnrSpectrum s;
        s.start_frequency = 1000.0 + 40000.0 * uniform(gen);
        s.delta_f = 0.5 + 100.0 * uniform(gen);
        s.signal_power = signal;
        s.noise_power = noise;
        double previous = 0.0;
        for (const CapacityPoint& p : capacity_cumulative(s)) {
            CHECK(p.cumulative_bits_per_s >= previous);
            previous = p.cumulative_bits_per_s;
        }
    }
}

TEST_CASE("capacity depends only on the signal-to-noise ratio") {
    std::mt19937_64 gen(15);
    std::vector<double> signal(50);
    std::vector<double> noise(50);
    for (std::size_t i = 0; i < 50; ++i) {
        signal[i] = 100.0 * uniform(gen);
        noise[i] = 0.1 + uniform(gen);
    }
    SnrSpectrum a;
    a.start_frequency = 31000.0;
    a.delta_f = 10.0;
    a.signal_power = signal;
    a.noise_power = noise;

    SnrSpectrum b = a;
    for (auto& s : b.signal_power) s *= 7.5;
    for (auto& n : b.noise_power) n *= 7.5;

    CHECK(capacity_cumulative(a).back().cumulative_bits_per_s ==
          doctest::Approx(capacity_cumulative(b).back().cumulative_bits_per_s)
              .epsilon(1e-12));
}

TEST_CASE("splitting bins into equal-SNR halves preserves total capacity") {
    std::mt19937_64 gen(21);
    std::vector<double> signal(64);
    for (auto& s : signal) s = 40.0 * uniform(gen);
    const SnrSpectrum coarse = make_spectrum(31000.0, 20.0, signal, 1.0);

    std::vector<double> refined;
    for (double s : signal) {
        refined.push_back(s);
        refined.push_back(s);
    }
    const SnrSpectrum fine = make_spectrum(31000.0, 10.0, refined, 1.0);
    CHECK(capacity_cumulative(coarse).back().cumulative_bits_per_s ==
          doctest::Approx(capacity_cumulative(fine).back().cumulative_bits_per_s)
              .epsilon(1e-12));
}

TEST_CASE("invalid spectra are rejected") {
    SnrSpectrum s = uniform_snr(5.0, 4);
    s.noise_power[2] = 0.0;
    CHECK_THROWS_AS(capacity_cumulative(s), std::domain_error);
    s = uniform_snr(5.0, 4);
    s.signal_power[0] = -1.0;
    CHECK_THROWS_AS(capacity_cumulative(s), std::domain_error);
    s = uniform_snr(5.0, 4);
    s.delta_f = 0.0;
    CHECK_THROWS_AS(capacity_cumulative(s), std::domain_error);
}
