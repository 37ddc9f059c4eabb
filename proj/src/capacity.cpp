#include "uwlink/capacity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uwlink {

void SnrSpectrum::validate() const {
    if (!(delta_f > 0.0)) {
        throw std::domain_error("spectrum bin width must be positive");
    }
    if (signal_power.empty()) {
        throw std::domain_error("spectrum must contain at least one bin");
    }
    if (noise_power.size() != signal_power.size()) {
        throw std::domain_error("signal and noise bin counts differ");
    }
    for (std::size_t i = 0; i < signal_power.size(); ++i) {
        if (!(signal_power[i] >= 0.0) || !std::isfinite(signal_power[i])) {
            throw std::domain_error("signal power in bin " + std::to_string(i) +
                                    " must be finite and non-negative");
        }
        if (!(noise_power[i] > 0.0) || !std::isfinite(noise_power[i])) {
            throw std::domain_error("noise power in bin " + std::to_string(i) +
                                    " must be finite and positive");
        }
    }
}

SnrSpectrum make_spectrum(double start_frequency, double delta_f,
                          std::vector<double> signal_power, double noise_power) {
    SnrSpectrum s;
    s.start_frequency = start_frequency;
    s.delta_f = delta_f;
    s.noise_power.assign(signal_power.size(), noise_power);
    s.signal_power = std::move(signal_power);
    s.validate();
    return s;
}

double snr_from_levels(double signal_dbv, double noise_floor_dbv) {
    return std::pow(10.0, (signal_dbv - noise_floor_dbv) / 10.0);
}

SnrSpectrum spectrum_from_dbv(double start_frequency, double delta_f,
                              const std::vector<double>& level_dbv,
                              double noise_floor_dbv) {
    const double noise = std::pow(10.0, noise_floor_dbv / 10.0);
    std::vector<double> signal(level_dbv.size(), 0.0);
    for (std::size_t i = 0; i < level_dbv.size(); ++i) {
        signal[i] = level_dbv[i] < noise_floor_dbv ? 0.0
                                                   : std::pow(10.0, level_dbv[i] / 10.0);
    }
    return make_spectrum(start_frequency, delta_f, std::move(signal), noise);
}

std::vector<CapacityPoint> capacity_cumulative(const SnrSpectrum& spectrum) {
    spectrum.validate();
    std::vector<CapacityPoint> curve;
    curve.reserve(spectrum.n_bins());
    double running = 0.0;
    for (std::size_t i = 0; i < spectrum.n_bins(); ++i) {
        running += std::log2(1.0 + spectrum.signal_power[i] / spectrum.noise_power[i]) *
                   spectrum.delta_f;
        curve.push_back(CapacityPoint{
            spectrum.start_frequency + spectrum.delta_f * static_cast<double>(i + 1), running});
    }
    return curve;
}

namespace {

/// Snap a frequency to a bin-edge index, rounding toward the band interior.
std::size_t snap_edge(const SnrSpectrum& s, double f, bool is_lower) {
    const double pos = (f - s.start_frequency) / s.delta_f;
    const double eps = 1e-9;
    const double idx = is_lower ? std::ceil(pos - eps) : std::floor(pos + eps);
    if (idx < 0.0 || idx > static_cast<double>(s.n_bins())) {
        throw std::domain_error("frequency " + std::to_string(f) +
                                " Hz lies outside the spectrum band");
    }
    return static_cast<std::size_t>(idx);
}

}  // namespace

double capacity_band(const SnrSpectrum& spectrum, double f_lo, double f_hi) {
    spectrum.validate();
    if (!(f_lo <= f_hi)) {
        throw std::domain_error("band bounds must satisfy f_lo <= f_hi");
    }
    const std::size_t lo = snap_edge(spectrum, f_lo, true);
    const std::size_t hi = snap_edge(spectrum, f_hi, false);
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        sum += std::log2(1.0 + spectrum.signal_power[i] / spectrum.noise_power[i]) *
               spectrum.delta_f;
    }
    return sum;
}

}  // namespace uwlink
