#pragma once

#include <cstdint>
#include <vector>

#include "uwlink/antenna.hpp"
#include "uwlink/capacity.hpp"

namespace uwlink {

/// Waveform parameters of the binary FSK modem. The tones sit symmetrically
/// around the carrier: f1 = center - spacing/2 conveys bit 0 and
/// f2 = center + spacing/2 conveys bit 1. Noncoherent orthogonality needs
/// the spacing to be an integer multiple of the bit rate.
struct BfskConfig {
    double center_frequency = 34629.26;  ///< Hz
    double tone_spacing = 1000.0;        ///< delta_f, Hz
    double bit_rate = 1000.0;            ///< R_b, bits/s
    double sample_rate = 1.0e6;          ///< samples/s
    double amplitude = 1.0;
    bool phase_continuous = true;        ///< false resets phase at bit edges (ablation)

    double tone_low() const { return center_frequency - 0.5 * tone_spacing; }
    double tone_high() const { return center_frequency + 0.5 * tone_spacing; }
    double bit_period() const { return 1.0 / bit_rate; }

    /// Spacing is an integer multiple (>= 1) of the bit rate.
    bool orthogonal() const;

    /// Positivity and Nyquist (sample_rate > 2 * upper tone); throws on violation.
    void validate() const;
};

/// First sample index of bit `bit_index`; fractional bit periods accumulate
/// instead of truncating, so bit windows differ by at most one sample.
std::int64_t bit_boundary_sample(const BfskConfig& config, std::uint64_t bit_index);

/// Per-bit tone bursts of one bit period each. With phase_continuous the
/// running phase carries across bit edges (CPFSK-style):
///   x[n] = amplitude * sin(phi_n),  phi_0 = initial_phase,
///   phi_{n+1} = phi_n + 2*pi*f_bit(n)/sample_rate,
/// with the accumulator reduced mod 2*pi at bit boundaries to stay bounded.
/// An empty bit sequence yields an empty waveform.
std::vector<double> modulate(const BfskConfig& config, const std::vector<std::uint8_t>& bits,
                             double initial_phase = 0.0);

/// Adds white Gaussian noise scaled so that (measured signal power)/(noise
/// power) equals 10^(snr_db/10). Deterministic per seed across platforms.
/// An infinite snr_db returns the waveform unchanged.
std::vector<double> add_awgn(const std::vector<double>& waveform, double snr_db,
                             std::uint64_t seed);

struct DemodResult {
    std::vector<std::uint8_t> bits;
    std::size_t trailing_samples_discarded = 0;  ///< partial final bit, if any
};

/// Noncoherent tone-energy detector: per bit window, single-bin DFT
/// magnitudes at the two tones over a rectangular window; the larger energy
/// decides, ties break toward bit 0.
DemodResult demodulate_noncoherent(const BfskConfig& config,
                                   const std::vector<double>& waveform);

/// Noncoherent orthogonal BFSK in AWGN:
///   Eb/N0 = snr_linear * bit_rate / tone_spacing,
///   P_b = 0.5 * exp(-Eb/(2 N0)).
/// snr_linear is the tone SNR referenced to noise in bandwidth tone_spacing.
double ber_closed_form(double snr_linear, double bit_rate, double tone_spacing);

struct BerResult {
    std::uint64_t bit_errors = 0;
    std::uint64_t bits_sent = 0;
    double ber_estimate = 0.0;
    double wilson_lo = 0.0;   ///< Wilson 95% interval
    double wilson_hi = 0.0;
    std::uint64_t seed = 0;
};

/// Wilson 95% score interval for `errors` failures out of `n` trials.
void wilson_interval(std::uint64_t errors, std::uint64_t n, double& lo, double& hi);

/// Filters a real waveform by the array's motional transfer: FFT, multiply
/// the positive-frequency bins by motional_transfer, inverse FFT, truncate
/// back to the input length. Exposes the resonator's band limiting and
/// group-delay dispersion to waveform experiments.
std::vector<double> apply_antenna_filter(const std::vector<double>& waveform,
                                         const ArraySpec& array, double sample_rate);

/// Modulate -> add_awgn -> demodulate over random bits. snr_db uses the same
/// convention as ber_closed_form; the sample-level noise variance is derived
/// internally from the sample rate. Bits are processed in fixed 10^4-bit
/// blocks whose bit and noise streams are seeded by split_seed(seed, block),
/// so results do not depend on execution order or parallelism.
/// `antenna_filter`, when given, runs the waveform through the array response
/// after modulation (transmit) and again after the channel (receive); it is
/// off by default so the estimate stays comparable to the AWGN closed form.
BerResult ber_monte_carlo(const BfskConfig& config, double snr_db, std::uint64_t n_bits,
                          std::uint64_t seed, const ArraySpec* antenna_filter = nullptr);

struct BitrateResult {
    double bit_rate = 0.0;
    bool capped = false;  ///< the orthogonality bound R_b <= delta_f was binding
};

/// Largest bit rate meeting target_ber on the given spectrum, using the
/// minimum of the interpolated SNRs at the two tones and capped at the
/// orthogonal-signaling bound R_b <= tone_spacing. A target of exactly 0.5
/// is met by any rate and returns the cap with the flag set.
BitrateResult max_bitrate_for_ber(const SnrSpectrum& spectrum, double target_ber,
                                  double tone_spacing, double center_frequency);

/// Linear SNR of `spectrum` at an arbitrary frequency, interpolated linearly
/// between bin sample points and clamped at the outer samples. Frequencies
/// outside the band raise a domain error.
double interpolate_snr(const SnrSpectrum& spectrum, double frequency_hz);

}  // namespace uwlink
