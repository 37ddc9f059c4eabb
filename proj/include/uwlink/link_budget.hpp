#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uwlink {

/// Multiplicative link-budget factors of an antenna-array link relative to a
/// single-antenna reference, and the same total in dB. The dB field uses
/// 20*log10 of the factor; the raw factor is kept so callers preferring
/// 10*log10 can convert themselves.
struct LinkScaling {
    double rad_resistance_ratio = 1.0;
    double tx_array_power_gain = 1.0;
    double rx_array_gain = 1.0;
    double total_link_factor = 1.0;
    double total_link_db = 0.0;
};

struct ArrayGains {
    double tx_power_gain = 1.0;  ///< n_tx^2
    double rx_gain = 1.0;        ///< n_rx
    double combined = 1.0;       ///< n_tx^2 * n_rx
};

/// Radiation-resistance ratio R_rad(b)/R_rad(a) between two media from
/// R_rad ∝ 1/(lambda^2 sqrt(eps_r)): (lambda_a/lambda_b)^2 * sqrt(eps_r_a/eps_r_b).
double radiation_resistance_ratio_media(double lambda_a, double lambda_b,
                                        double eps_r_a, double eps_r_b);

/// Ideal array gains, mutual coupling neglected.
ArrayGains array_gains(int n_tx, int n_rx);

/// Combined link-budget improvement: medium ratio times the ideal array
/// gains, optionally derated by a mutual-coupling efficiency in (0, 1].
LinkScaling total_link_budget(double medium_ratio, int n_tx, int n_rx,
                              double coupling_efficiency = 1.0);

/// One power-law segment of a piecewise path-loss model:
/// snr(r) = level_at_rmin - 10 * exponent * log10(r / r_min) for r in [r_min, r_max].
struct PathLossSegment {
    double r_min = 0.0;         ///< m
    double r_max = 0.0;         ///< m
    double exponent = 0.0;      ///< decay exponent n of 1/r^n
    double level_at_rmin = 0.0; ///< dB
};

/// Piecewise log-distance model, continuous across segment boundaries.
struct PathLossModel {
    std::vector<PathLossSegment> segments;
    double noise_floor_db = 0.0;  ///< receiver reference, carried as metadata
};

/// One peak-SNR measurement at a given transmitter-receiver separation.
struct RangeSample {
    double distance = 0.0;           ///< m
    double peak_snr_db = 0.0;
    double frequency_at_peak = 0.0;  ///< Hz
    std::string label;               ///< e.g. "ok", "anomaly", "noisefloor_shift"
};

/// Joint least-squares fit of per-segment decay exponents with the predicted
/// SNR constrained continuous at every breakpoint. `breakpoints` lists the
/// interior segment boundaries; the outer boundaries come from the data span.
/// Samples whose index is set in `exclude` are flagged out of the fit (they
/// stay in the caller's data). A segment with fewer than two included samples
/// is underdetermined and raises a domain error naming it.
PathLossModel fit_path_loss(const std::vector<RangeSample>& samples,
                            const std::vector<double>& breakpoints,
                            const std::vector<bool>& exclude = {});

struct SnrPrediction {
    double snr_db = 0.0;
    bool extrapolated = false;  ///< distance fell outside the fitted span
};

/// Piecewise log-linear evaluation of the model, continuous across
/// breakpoints; distances outside the span extrapolate the nearest segment.
SnrPrediction predict_snr(const PathLossModel& model, double distance);

}  // namespace uwlink
