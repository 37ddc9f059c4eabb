#include "uwlink/bfsk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "uwlink/constants.hpp"
#include "uwlink/rng.hpp"

namespace uwlink {

bool BfskConfig::orthogonal() const {
    const double k = tone_spacing / bit_rate;
    return k >= 1.0 - 1e-9 && std::abs(k - std::round(k)) < 1e-9;
}

void BfskConfig::validate() const {
    if (!(center_frequency > 0.0) || !(tone_spacing > 0.0) || !(bit_rate > 0.0) ||
        !(sample_rate > 0.0)) {
        throw std::domain_error("BFSK config values must be positive");
    }
    if (!(amplitude >= 0.0)) {
        throw std::domain_error("amplitude must be non-negative");
    }
    if (!(tone_low() > 0.0)) {
        throw std::domain_error("lower tone is not positive; reduce the tone spacing");
    }
    if (!(sample_rate > 2.0 * tone_high())) {
        throw std::domain_error("sample rate " + std::to_string(sample_rate) +
                                " violates Nyquist for the upper tone at " +
                                std::to_string(tone_high()) + " Hz");
    }
}

std::int64_t bit_boundary_sample(const BfskConfig& config, std::uint64_t bit_index) {
    return static_cast<std::int64_t>(
        std::llround(static_cast<double>(bit_index) * config.sample_rate / config.bit_rate));
}

std::vector<double> modulate(const BfskConfig& config, const std::vector<std::uint8_t>& bits,
                             double initial_phase) {
    config.validate();
    if (bits.empty()) return {};

    const std::int64_t total = bit_boundary_sample(config, bits.size());
    std::vector<double> waveform(static_cast<std::size_t>(total));

    const double step_low = 2.0 * PI * config.tone_low() / config.sample_rate;
    const double step_high = 2.0 * PI * config.tone_high() / config.sample_rate;

    double phase = initial_phase;
    std::int64_t n = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const double step = bits[i] ? step_high : step_low;
        const std::int64_t end = bit_boundary_sample(config, i + 1);
        if (!config.phase_continuous) phase = initial_phase;
        for (; n < end; ++n) {
            waveform[static_cast<std::size_t>(n)] = config.amplitude * std::sin(phase);
            phase += step;
        }
        // keep the accumulator bounded on long runs
        phase = std::fmod(phase, 2.0 * PI);
    }
    return waveform;
}

std::vector<double> add_awgn(const std::vector<double>& waveform, double snr_db,
                             std::uint64_t seed) {
    if (std::isinf(snr_db) && snr_db > 0.0) return waveform;
    if (waveform.empty()) return {};

    double power = 0.0;
    for (double x : waveform) power += x * x;
    power /= static_cast<double>(waveform.size());

    const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0));
    Rng rng(seed);
    std::vector<double> noisy(waveform.size());
    for (std::size_t i = 0; i < waveform.size(); ++i) {
        noisy[i] = waveform[i] + sigma * rng.normal();
    }
    return noisy;
}

namespace {

/// Single-bin DFT energy |sum x[n] exp(-j 2 pi f n / fs)|^2 over
/// [begin, end), with n counted from the window start.
double tone_energy(const std::vector<double>& x, std::size_t begin, std::size_t end,
                   double frequency, double sample_rate) {
    const double step = 2.0 * PI * frequency / sample_rate;
    double re = 0.0;
    double im = 0.0;
    // Goertzel recurrence; one multiply-add per sample
    const double coeff = 2.0 * std::cos(step);
    double s_prev = 0.0;
    double s_prev2 = 0.0;
    for (std::size_t n = begin; n < end; ++n) {
        const double s = x[n] + coeff * s_prev - s_prev2;
        s_prev2 = s_prev;
        s_prev = s;
    }
    re = s_prev - s_prev2 * std::cos(step);
    im = s_prev2 * std::sin(step);
    return re * re + im * im;
}

}  // namespace

DemodResult demodulate_noncoherent(const BfskConfig& config,
                                   const std::vector<double>& waveform) {
    config.validate();
    DemodResult result;
    const std::int64_t length = static_cast<std::int64_t>(waveform.size());

    std::uint64_t i = 0;
    while (true) {
        const std::int64_t begin = bit_boundary_sample(config, i);
        const std::int64_t end = bit_boundary_sample(config, i + 1);
        if (end > length) {
            result.trailing_samples_discarded = static_cast<std::size_t>(
                length > begin ? length - begin : 0);
            break;
        }
        const double e_low = tone_energy(waveform, static_cast<std::size_t>(begin),
                                         static_cast<std::size_t>(end), config.tone_low(),
                                         config.sample_rate);
        const double e_high = tone_energy(waveform, static_cast<std::size_t>(begin),
                                          static_cast<std::size_t>(end), config.tone_high(),
                                          config.sample_rate);
        result.bits.push_back(e_high > e_low ? 1 : 0);  // tie -> bit 0
        ++i;
    }
    return result;
}

double ber_closed_form(double snr_linear, double bit_rate, double tone_spacing) {
    if (snr_linear < 0.0) {
        throw std::domain_error("linear SNR must be non-negative");
    }
    if (!(bit_rate > 0.0) || !(tone_spacing > 0.0)) {
        throw std::domain_error("bit rate and tone spacing must be positive");
    }
    const double eb_n0 = snr_linear * bit_rate / tone_spacing;
    return 0.5 * std::exp(-0.5 * eb_n0);
}

void wilson_interval(std::uint64_t errors, std::uint64_t n, double& lo, double& hi) {
    if (n == 0) {
        throw std::domain_error("Wilson interval needs at least one trial");
    }
    const double z = 1.959963984540054;  // 95%
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(errors) / nn;
    const double z2n = z * z / nn;
    const double center = (p + z2n / 2.0) / (1.0 + z2n);
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2n / (4.0 * nn)) / (1.0 + z2n);
    lo = center - half;
    hi = center + half;
}

namespace {

// iterative radix-2 FFT, in place; inverse via conjugation
void fft(std::vector<std::complex<double>>& x, bool inverse) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * PI / static_cast<double>(len);
        const std::complex<double> w_len(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = x[i + k];
                const std::complex<double> v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= w_len;
            }
        }
    }
    if (inverse) {
        for (auto& value : x) value /= static_cast<double>(n);
    }
}

}  // namespace

std::vector<double> apply_antenna_filter(const std::vector<double>& waveform,
                                         const ArraySpec& array, double sample_rate) {
    if (waveform.empty()) return {};
    if (!(sample_rate > 0.0)) {
        throw std::domain_error("sample rate must be positive");
    }
    std::size_t size = 1;
    while (size < 2 * waveform.size()) size <<= 1;  // padding absorbs the filter tail

    std::vector<std::complex<double>> spectrum(size);
    for (std::size_t i = 0; i < waveform.size(); ++i) spectrum[i] = waveform[i];
    fft(spectrum, false);

    spectrum[0] = 0.0;  // the motional branch does not pass DC
    for (std::size_t k = 1; k <= size / 2; ++k) {
        const double f = sample_rate * static_cast<double>(k) / static_cast<double>(size);
        const std::complex<double> h = motional_transfer(array, f);
        spectrum[k] *= h;
        if (k < size / 2) spectrum[size - k] *= std::conj(h);
    }
    fft(spectrum, true);

    std::vector<double> filtered(waveform.size());
    for (std::size_t i = 0; i < waveform.size(); ++i) filtered[i] = spectrum[i].real();
    return filtered;
}

BerResult ber_monte_carlo(const BfskConfig& config, double snr_db, std::uint64_t n_bits,
                          std::uint64_t seed, const ArraySpec* antenna_filter) {
    config.validate();
    if (n_bits < 1) {
        throw std::domain_error("n_bits must be at least 1");
    }

    // Tone SNR (noise bandwidth = tone spacing) to per-sample SNR: the bit
    // window integrates over sample_rate/bit_rate samples, so
    //   Eb/N0 = snr_sample * sample_rate / (2 * bit_rate).
    const double snr_linear = std::pow(10.0, snr_db / 10.0);
    const double eb_n0 = snr_linear * config.bit_rate / config.tone_spacing;
    const double snr_sample = 2.0 * eb_n0 * config.bit_rate / config.sample_rate;
    const double snr_sample_db = 10.0 * std::log10(snr_sample);

    constexpr std::uint64_t kBlockBits = 10000;
    BerResult result;
    result.seed = seed;

    std::vector<std::uint8_t> bits;
    for (std::uint64_t block = 0; block * kBlockBits < n_bits; ++block) {
        const std::uint64_t count = std::min(kBlockBits, n_bits - block * kBlockBits);
        Rng bit_rng(split_seed(seed, 2 * block));
        bits.resize(count);
        for (auto& b : bits) b = bit_rng.bernoulli() ? 1 : 0;

        std::vector<double> tx = modulate(config, bits);
        if (antenna_filter != nullptr) {
            tx = apply_antenna_filter(tx, *antenna_filter, config.sample_rate);
        }
        std::vector<double> rx = add_awgn(tx, snr_sample_db, split_seed(seed, 2 * block + 1));
        if (antenna_filter != nullptr) {
            rx = apply_antenna_filter(rx, *antenna_filter, config.sample_rate);
        }
        const DemodResult demod = demodulate_noncoherent(config, rx);

        for (std::size_t i = 0; i < demod.bits.size(); ++i) {
            if (demod.bits[i] != bits[i]) ++result.bit_errors;
        }
        result.bits_sent += demod.bits.size();
    }

    result.ber_estimate = static_cast<double>(result.bit_errors) /
                          static_cast<double>(result.bits_sent);
    wilson_interval(result.bit_errors, result.bits_sent, result.wilson_lo, result.wilson_hi);
    return result;
}

double interpolate_snr(const SnrSpectrum& spectrum, double frequency_hz) {
    spectrum.validate();
    if (frequency_hz < spectrum.start_frequency || frequency_hz > spectrum.band_edge()) {
        throw std::domain_error("frequency " + std::to_string(frequency_hz) +
                                " Hz lies outside the spectrum band [" +
                                std::to_string(spectrum.start_frequency) + ", " +
                                std::to_string(spectrum.band_edge()) + "]");
    }
    const double pos = (frequency_hz - spectrum.start_frequency) / spectrum.delta_f;
    const std::size_t last = spectrum.n_bins() - 1;
    if (pos <= 0.0) return spectrum.signal_power.front() / spectrum.noise_power.front();
    if (pos >= static_cast<double>(last)) {
        return spectrum.signal_power[last] / spectrum.noise_power[last];
    }
    const std::size_t i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    const double snr_i = spectrum.signal_power[i] / spectrum.noise_power[i];
    const double snr_j = spectrum.signal_power[i + 1] / spectrum.noise_power[i + 1];
    return snr_i + frac * (snr_j - snr_i);
}

BitrateResult max_bitrate_for_ber(const SnrSpectrum& spectrum, double target_ber,
                                  double tone_spacing, double center_frequency) {
    if (!(tone_spacing > 0.0)) {
        throw std::domain_error("tone spacing must be positive");
    }
    if (!(target_ber > 0.0) || target_ber > 0.5) {
        throw std::domain_error("target BER must lie in (0, 0.5]");
    }
    const double snr = std::min(interpolate_snr(spectrum, center_frequency - 0.5 * tone_spacing),
                                interpolate_snr(spectrum, center_frequency + 0.5 * tone_spacing));

    // Solve 0.5*exp(-(snr/2) * (delta_f/R_b)) = target for R_b; the required
    // energy per bit grows as the rate drops, so the achievable rate scales
    // with SNR and is capped by the orthogonality bound R_b <= delta_f.
    const double log_term = std::log(1.0 / (2.0 * target_ber));
    if (log_term <= 0.0) {
        return BitrateResult{tone_spacing, true};  // target 0.5: any rate qualifies
    }
    if (!(snr > 0.0)) {
        return BitrateResult{0.0, false};
    }
    const double rate = snr * tone_spacing / (2.0 * log_term);
    if (rate >= tone_spacing) {
        return BitrateResult{tone_spacing, true};
    }
    return BitrateResult{rate, false};
}

}  // namespace uwlink
