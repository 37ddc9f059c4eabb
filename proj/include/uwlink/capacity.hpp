#pragma once

#include <cstdint>
#include <vector>

namespace uwlink {

/// Frequency-indexed signal and noise powers on a uniform grid. Bin i is
/// sampled at start_frequency + i * delta_f and covers the band
/// [start_frequency + i*delta_f, start_frequency + (i+1)*delta_f).
/// Powers are linear (V^2 against a common reference); only their ratio
/// matters for capacity.
struct SnrSpectrum {
    double start_frequency = 0.0;       ///< Hz
    double delta_f = 0.0;               ///< uniform bin width, Hz
    std::vector<double> signal_power;   ///< per-bin linear power, >= 0
    std::vector<double> noise_power;    ///< per-bin linear power, > 0

    std::size_t n_bins() const { return signal_power.size(); }
    double band_edge() const { return start_frequency + delta_f * static_cast<double>(n_bins()); }

    void validate() const;
};

/// Uniform spectrum with a constant noise power per bin.
SnrSpectrum make_spectrum(double start_frequency, double delta_f,
                          std::vector<double> signal_power, double noise_power);

/// Spectrum from measured dBV levels against a constant noise floor. Bins
/// whose level sits below the floor clip to zero S/N; peak-hold data cannot
/// distinguish signal absence from noise there.
SnrSpectrum spectrum_from_dbv(double start_frequency, double delta_f,
                              const std::vector<double>& level_dbv,
                              double noise_floor_dbv);

/// dBV level difference to linear power ratio, 10^((signal - noise)/10);
/// dBV differences are power ratios of the squared RMS voltages.
double snr_from_levels(double signal_dbv, double noise_floor_dbv);

struct CapacityPoint {
    double frequency = 0.0;          ///< upper edge of the bin, Hz
    double cumulative_bits_per_s = 0.0;
};

/// Running Shannon-Hartley sum: partial sums of log2(1 + S_n/N_n) * delta_f.
/// The last point carries the total capacity over the whole band.
std::vector<CapacityPoint> capacity_cumulative(const SnrSpectrum& spectrum);

/// Capacity in [f_lo, f_hi]: cumulative(f_hi) - cumulative(f_lo) with both
/// bounds snapped to bin edges toward the interior of the band.
double capacity_band(const SnrSpectrum& spectrum, double f_lo, double f_hi);

}  // namespace uwlink
