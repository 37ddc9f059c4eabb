#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uwlink/capacity.hpp"
#include "uwlink/link_budget.hpp"

namespace uwlink {

/// Malformed or unreadable input file; messages carry the line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic CSV number formatting: 6 significant digits, or the
/// shortest round-trip form when 6 digits would lose the value. Always '.'
/// as the decimal separator, independent of locale.
std::string format_number(double value);

/// Quantize to the 6-significant-digit grid format_number prefers.
double round_to_6sig(double value);

inline constexpr double DEFAULT_NOISE_FLOOR_DBV = -91.0;

/// Spectrum CSV: `# key=value` metadata lines, a `frequency_hz,level_dbv`
/// header, then one row per measurement point with strictly increasing
/// frequencies. Unknown metadata keys survive a read/write round trip.
struct SpectrumFile {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::pair<double, double>> rows;  ///< frequency_hz, level_dbv

    const std::string* find_metadata(std::string_view key) const;
    double metadata_number(std::string_view key, double fallback) const;
};

SpectrumFile read_spectrum_file(std::istream& in, const std::string& name = "<stream>");
SpectrumFile read_spectrum_file(const std::string& path);
void write_spectrum_file(const SpectrumFile& file, std::ostream& out);
void write_spectrum_file(const SpectrumFile& file, const std::string& path);

/// Uniform-grid conversion. Non-uniform grids are resampled to the coarsest
/// consecutive spacing by linear interpolation of the dB levels; the noise
/// floor comes from `noise_floor_dbv` metadata, else the -91 dBV default.
SnrSpectrum to_snr_spectrum(const SpectrumFile& file);
SnrSpectrum parse_spectrum(const std::string& path);

inline constexpr const char* RANGE_FLAG_OK = "ok";
inline constexpr const char* RANGE_FLAG_ANOMALY = "anomaly";
inline constexpr const char* RANGE_FLAG_NOISEFLOOR_SHIFT = "noisefloor_shift";

bool is_known_range_flag(std::string_view flag);

/// Range-sweep CSV: optional metadata, then
/// `distance_m,peak_snr_db,peak_frequency_hz,flag` rows. Flags come from the
/// closed set {ok, anomaly, noisefloor_shift} and land in RangeSample::label.
struct RangeFile {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<RangeSample> samples;
};

RangeFile read_range_file(std::istream& in, const std::string& name = "<stream>");
RangeFile read_range_file(const std::string& path);
void write_range_file(const RangeFile& file, std::ostream& out);
void write_range_file(const RangeFile& file, const std::string& path);
std::vector<RangeSample> parse_range(const std::string& path);

/// Line-oriented `section.key = value` configuration. Keys outside
/// known_config_keys() are hard errors, as are duplicates.
struct ConfigFile {
    std::map<std::string, double> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    double get(const std::string& key, double fallback) const;
};

const std::vector<std::string>& known_config_keys();
ConfigFile read_config(std::istream& in, const std::string& name = "<stream>");
ConfigFile parse_config(const std::string& path);

/// Extra rows injected into a synthetic dataset: a sample at `distance`
/// offset from the model trend by `offset_db` and flagged accordingly.
struct SynthAnomaly {
    double distance = 0.0;
    double offset_db = 0.0;
    std::string flag = RANGE_FLAG_ANOMALY;
};

struct SynthOptions {
    int samples_per_segment = 48;       ///< log-spaced distances per model segment
    double jitter_sigma_db = 1.0;       ///< Gaussian level jitter; 0 disables
    double spectrum_f_start = 31000.0;  ///< Hz
    double spectrum_f_stop = 41000.0;   ///< Hz
    double spectrum_delta_f = 25.0;     ///< Hz
    std::vector<SynthAnomaly> anomalies;
};

struct SynthDataset {
    std::vector<SpectrumFile> spectra;  ///< one per range sample, same order
    RangeFile range;
};

/// Synthetic stand-in dataset: per-distance spectra with a Lorentzian signal
/// peak at the array resonance (antenna.f0_hz/antenna.q from the config) on a
/// constant noise floor, peak levels from the path-loss model plus per-sample
/// Gaussian jitter. Byte-deterministic per seed; all values quantized to the
/// 6-significant-digit file grid.
SynthDataset synth_dataset(const PathLossModel& model, const ConfigFile& config,
                           std::uint64_t seed, const SynthOptions& options = {});

/// Writes range.csv plus spectrum_###.csv files; returns the paths written.
std::vector<std::string> write_synth_dataset(const SynthDataset& dataset,
                                             const std::string& directory);

}  // namespace uwlink
