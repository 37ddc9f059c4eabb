#include "uwlink/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "uwlink/rng.hpp"

namespace uwlink {

std::string format_number(double value) {
    char buf[64];
    auto six = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
    std::string text(buf, six.ptr);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    if (back == value) return text;
    auto shortest = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, shortest.ptr);
}

double round_to_6sig(double value) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
    double back = 0.0;
    std::from_chars(buf, r.ptr, back);
    return back;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view token, const std::string& name, std::size_t line) {
    token = trim(token);
    if (token.empty()) fail(name, line, "empty numeric field");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(name, line, "not a number: '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        fail(name, line, "non-finite value: '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_csv(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

bool parse_metadata_line(std::string_view line,
                         std::vector<std::pair<std::string, std::string>>& metadata) {
    if (line.empty() || line.front() != '#') return false;
    std::string_view body = trim(line.substr(1));
    const std::size_t eq = body.find('=');
    if (eq != std::string_view::npos) {
        metadata.emplace_back(std::string(trim(body.substr(0, eq))),
                              std::string(trim(body.substr(eq + 1))));
    }
    return true;  // '#' lines without '=' are plain comments, dropped
}

void write_metadata(const std::vector<std::pair<std::string, std::string>>& metadata,
                    std::ostream& out) {
    for (const auto& [key, value] : metadata) {
        out << "# " << key << "=" << value << "\n";
    }
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

constexpr const char* SPECTRUM_HEADER = "frequency_hz,level_dbv";
constexpr const char* RANGE_HEADER = "distance_m,peak_snr_db,peak_frequency_hz,flag";

}  // namespace

const std::string* SpectrumFile::find_metadata(std::string_view key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) return &v;
    }
    return nullptr;
}

double SpectrumFile::metadata_number(std::string_view key, double fallback) const {
    const std::string* raw = find_metadata(key);
    if (raw == nullptr) return fallback;
    return parse_double(*raw, "metadata key '" + std::string(key) + "'", 0);
}

SpectrumFile read_spectrum_file(std::istream& in, const std::string& name) {
    SpectrumFile file;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (parse_metadata_line(view, file.metadata)) continue;
        if (!header_seen) {
            if (view != SPECTRUM_HEADER) {
                fail(name, line_no, std::string("expected header '") + SPECTRUM_HEADER + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(view);
        if (fields.size() != 2) fail(name, line_no, "expected 2 fields");
        const double freq = parse_double(fields[0], name, line_no);
        const double level = parse_double(fields[1], name, line_no);
        if (!file.rows.empty() && freq <= file.rows.back().first) {
            fail(name, line_no, "frequencies must be strictly increasing (got " +
                                    format_number(freq) + " after " +
                                    format_number(file.rows.back().first) + ")");
        }
        file.rows.emplace_back(freq, level);
    }
    if (!header_seen) fail(name, line_no, "missing header row");
    return file;
}

SpectrumFile read_spectrum_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return read_spectrum_file(in, path);
}

void write_spectrum_file(const SpectrumFile& file, std::ostream& out) {
    write_metadata(file.metadata, out);
    out << SPECTRUM_HEADER << "\n";
    for (const auto& [freq, level] : file.rows) {
        out << format_number(freq) << "," << format_number(level) << "\n";
    }
}

void write_spectrum_file(const SpectrumFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_spectrum_file(file, out);
}

SnrSpectrum to_snr_spectrum(const SpectrumFile& file) {
    if (file.rows.size() < 2) {
        throw ParseError("spectrum needs at least 2 rows to define a bin width");
    }
    const double noise_floor = file.metadata_number("noise_floor_dbv", DEFAULT_NOISE_FLOOR_DBV);

    double delta = 0.0;
    for (std::size_t i = 1; i < file.rows.size(); ++i) {
        delta = std::max(delta, file.rows[i].first - file.rows[i - 1].first);
    }
    bool uniform = true;
    for (std::size_t i = 1; i < file.rows.size(); ++i) {
        if (std::abs(file.rows[i].first - file.rows[i - 1].first - delta) > 1e-6 * delta) {
            uniform = false;
            break;
        }
    }

    std::vector<double> levels;
    if (uniform) {
        levels.reserve(file.rows.size());
        for (const auto& [freq, level] : file.rows) levels.push_back(level);
    } else {
        const double f0 = file.rows.front().first;
        const double span = file.rows.back().first - f0;
        const auto n_points = static_cast<std::size_t>(std::llround(span / delta)) + 1;
        levels.reserve(n_points);
        std::size_t j = 0;
        for (std::size_t k = 0; k < n_points; ++k) {
            const double f = std::min(f0 + delta * static_cast<double>(k),
                                      file.rows.back().first);
            while (j + 2 < file.rows.size() && file.rows[j + 1].first < f) ++j;
            const auto& [fa, la] = file.rows[j];
            const auto& [fb, lb] = file.rows[j + 1];
            levels.push_back(la + (lb - la) * (f - fa) / (fb - fa));
        }
    }
    return spectrum_from_dbv(file.rows.front().first, delta, levels, noise_floor);
}

SnrSpectrum parse_spectrum(const std::string& path) {
    return to_snr_spectrum(read_spectrum_file(path));
}

bool is_known_range_flag(std::string_view flag) {
    return flag == RANGE_FLAG_OK || flag == RANGE_FLAG_ANOMALY ||
           flag == RANGE_FLAG_NOISEFLOOR_SHIFT;
}

RangeFile read_range_file(std::istream& in, const std::string& name) {
    RangeFile file;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (parse_metadata_line(view, file.metadata)) continue;
        if (!header_seen) {
            if (view != RANGE_HEADER) {
                fail(name, line_no, std::string("expected header '") + RANGE_HEADER + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_csv(view);
        if (fields.size() != 4) fail(name, line_no, "expected 4 fields");
        RangeSample sample;
        sample.distance = parse_double(fields[0], name, line_no);
        sample.peak_snr_db = parse_double(fields[1], name, line_no);
        sample.frequency_at_peak = parse_double(fields[2], name, line_no);
        sample.label = std::string(trim(fields[3]));
        if (!(sample.distance > 0.0)) {
            fail(name, line_no, "distance must be positive");
        }
        if (!is_known_range_flag(sample.label)) {
            fail(name, line_no, "unknown flag '" + sample.label + "'");
        }
        file.samples.push_back(std::move(sample));
    }
    if (!header_seen) fail(name, line_no, "missing header row");
    return file;
}

RangeFile read_range_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return read_range_file(in, path);
}

void write_range_file(const RangeFile& file, std::ostream& out) {
    write_metadata(file.metadata, out);
    out << RANGE_HEADER << "\n";
    for (const RangeSample& s : file.samples) {
        out << format_number(s.distance) << "," << format_number(s.peak_snr_db) << ","
            << format_number(s.frequency_at_peak) << "," << s.label << "\n";
    }
}

void write_range_file(const RangeFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_range_file(file, out);
}

std::vector<RangeSample> parse_range(const std::string& path) {
    return read_range_file(path).samples;
}

const std::vector<std::string>& known_config_keys() {
    static const std::vector<std::string> keys = {
        "medium.conductivity_s_per_m", "antenna.f0_hz",    "antenna.q",
        "array.n_tx",                  "array.n_rx",       "modem.center_hz",
        "modem.delta_f_hz",            "modem.rb_bps",     "modem.sample_rate",
    };
    return keys;
}

double ConfigFile::get(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

ConfigFile read_config(std::istream& in, const std::string& name) {
    ConfigFile config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        const std::size_t eq = view.find('=');
        if (eq == std::string_view::npos) {
            fail(name, line_no, "expected 'section.key = value'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const auto& known = known_config_keys();
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            fail(name, line_no, "unknown key '" + key + "'");
        }
        if (config.values.count(key) != 0) {
            fail(name, line_no, "duplicate key '" + key + "'");
        }
        config.values[key] = parse_double(view.substr(eq + 1), name, line_no);
    }
    return config;
}

ConfigFile parse_config(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return read_config(in, path);
}

SynthDataset synth_dataset(const PathLossModel& model, const ConfigFile& config,
                           std::uint64_t seed, const SynthOptions& options) {
    if (model.segments.empty()) {
        throw std::domain_error("path-loss model has no segments");
    }
    if (options.samples_per_segment < 2) {
        throw std::domain_error("need at least 2 samples per segment");
    }
    if (options.jitter_sigma_db < 0.0) {
        throw std::domain_error("jitter sigma must be non-negative");
    }
    const double f0 = config.get("antenna.f0_hz", 35.5e3);
    const double q = config.get("antenna.q", 200.0);
    const double fwhm = f0 / q;

    // log-spaced distances, left endpoint inclusive per segment
    std::vector<std::pair<double, const SynthAnomaly*>> points;
    for (std::size_t k = 0; k < model.segments.size(); ++k) {
        const PathLossSegment& seg = model.segments[k];
        const bool last = (k + 1 == model.segments.size());
        const int n = options.samples_per_segment;
        // right endpoint only on the last segment; interior breakpoints belong
        // to the segment on their right
        for (int i = 0; i < n; ++i) {
            const double frac = static_cast<double>(i) /
                                static_cast<double>(last ? n - 1 : n);
            const double r = seg.r_min * std::pow(seg.r_max / seg.r_min, frac);
            points.emplace_back(round_to_6sig(r), nullptr);
        }
    }
    for (const SynthAnomaly& a : options.anomalies) {
        if (!is_known_range_flag(a.flag)) {
            throw std::domain_error("unknown anomaly flag '" + a.flag + "'");
        }
        points.emplace_back(round_to_6sig(a.distance), &a);
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    SynthDataset out;
    out.range.metadata.emplace_back("noise_floor_dbv", format_number(model.noise_floor_db));

    Rng rng(split_seed(seed, 0));
    const auto n_grid = static_cast<std::size_t>(std::llround(
                            (options.spectrum_f_stop - options.spectrum_f_start) /
                            options.spectrum_delta_f)) + 1;

    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const auto& [distance, anomaly] = points[idx];
        const double jitter = options.jitter_sigma_db > 0.0
                                  ? options.jitter_sigma_db * rng.normal()
                                  : 0.0;
        double snr = predict_snr(model, distance).snr_db + jitter;
        if (anomaly != nullptr) snr += anomaly->offset_db;
        snr = round_to_6sig(snr);

        RangeSample sample;
        sample.distance = distance;
        sample.peak_snr_db = snr;
        sample.frequency_at_peak = round_to_6sig(f0);
        sample.label = anomaly != nullptr ? anomaly->flag : RANGE_FLAG_OK;
        out.range.samples.push_back(sample);

        SpectrumFile spec;
        spec.metadata.emplace_back("medium", "synthetic");
        spec.metadata.emplace_back("distance_m", format_number(distance));
        spec.metadata.emplace_back("lna_gain_db", "0");
        spec.metadata.emplace_back("noise_floor_dbv", format_number(model.noise_floor_db));
        spec.rows.reserve(n_grid);
        for (std::size_t g = 0; g < n_grid; ++g) {
            const double f = options.spectrum_f_start +
                             options.spectrum_delta_f * static_cast<double>(g);
            const double detune = (f - f0) / (fwhm / 2.0);
            const double level = model.noise_floor_db + snr / (1.0 + detune * detune);
            spec.rows.emplace_back(round_to_6sig(f), round_to_6sig(level));
        }
        out.spectra.push_back(std::move(spec));
    }
    return out;
}

std::vector<std::string> write_synth_dataset(const SynthDataset& dataset,
                                             const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::vector<std::string> written;

    const fs::path range_path = fs::path(directory) / "range.csv";
    write_range_file(dataset.range, range_path.string());
    written.push_back(range_path.string());

    for (std::size_t i = 0; i < dataset.spectra.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "spectrum_%03zu.csv", i);
        const fs::path path = fs::path(directory) / name;
        write_spectrum_file(dataset.spectra[i], path.string());
        written.push_back(path.string());
    }
    return written;
}

}  // namespace uwlink
