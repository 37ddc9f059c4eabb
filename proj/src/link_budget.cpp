#include "uwlink/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uwlink {

double radiation_resistance_ratio_media(double lambda_a, double lambda_b,
                                        double eps_r_a, double eps_r_b) {
    if (!(lambda_a > 0.0) || !(lambda_b > 0.0)) {
        throw std::domain_error("wavelengths must be positive");
    }
    if (!(eps_r_a > 0.0) || !(eps_r_b > 0.0)) {
        throw std::domain_error("relative permittivities must be positive");
    }
    const double wavelength_ratio = lambda_a / lambda_b;
    return wavelength_ratio * wavelength_ratio * std::sqrt(eps_r_a / eps_r_b);
}

ArrayGains array_gains(int n_tx, int n_rx) {
    if (n_tx < 1 || n_rx < 1) {
        throw std::domain_error("element counts must be at least 1");
    }
    const double tx = static_cast<double>(n_tx) * static_cast<double>(n_tx);
    const double rx = static_cast<double>(n_rx);
    return ArrayGains{tx, rx, tx * rx};
}

LinkScaling total_link_budget(double medium_ratio, int n_tx, int n_rx,
                              double coupling_efficiency) {
    if (!(medium_ratio > 0.0)) {
        throw std::domain_error("medium ratio must be positive");
    }
    if (!(coupling_efficiency > 0.0) || coupling_efficiency > 1.0) {
        throw std::domain_error("coupling efficiency must be in (0, 1]");
    }
    const ArrayGains gains = array_gains(n_tx, n_rx);
    LinkScaling s;
    s.rad_resistance_ratio = medium_ratio;
    s.tx_array_power_gain = gains.tx_power_gain;
    s.rx_array_gain = gains.rx_gain;
    s.total_link_factor = medium_ratio * gains.combined * coupling_efficiency;
    s.total_link_db = 20.0 * std::log10(s.total_link_factor);
    return s;
}

namespace {

/// Gaussian elimination with partial pivoting on the (small) normal equations.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < 1e-12) {
            throw std::domain_error("path-loss fit is singular; samples do not span the segments");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double sum = b[row];
        for (std::size_t k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    return x;
}

std::size_t segment_of(const std::vector<double>& bounds, double r) {
    // bounds has n_segments + 1 entries; last segment is closed on the right
    for (std::size_t k = 0; k + 2 < bounds.size(); ++k) {
        if (r < bounds[k + 1]) return k;
    }
    return bounds.size() - 2;
}

}  // namespace

PathLossModel fit_path_loss(const std::vector<RangeSample>& samples,
                            const std::vector<double>& breakpoints,
                            const std::vector<bool>& exclude) {
    std::vector<const RangeSample*> used;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i < exclude.size() && exclude[i]) continue;
        if (!(samples[i].distance > 0.0)) {
            throw std::domain_error("sample distances must be positive");
        }
        used.push_back(&samples[i]);
    }
    if (used.size() < 2) {
        throw std::domain_error("at least two included samples are required");
    }

    double r_lo = used.front()->distance;
    double r_hi = r_lo;
    for (const RangeSample* s : used) {
        r_lo = std::min(r_lo, s->distance);
        r_hi = std::max(r_hi, s->distance);
    }

    std::vector<double> bounds{r_lo};
    std::vector<double> sorted_bp = breakpoints;
    std::sort(sorted_bp.begin(), sorted_bp.end());
    for (double bp : sorted_bp) {
        if (bp <= bounds.back()) {
            throw std::domain_error("breakpoints must be increasing and inside the data span");
        }
        if (bp >= r_hi) {
            throw std::domain_error("breakpoint " + std::to_string(bp) +
                                    " m lies at or beyond the largest sample distance");
        }
        bounds.push_back(bp);
    }
    bounds.push_back(r_hi);
    const std::size_t n_segments = bounds.size() - 1;

    std::vector<std::size_t> per_segment(n_segments, 0);
    for (const RangeSample* s : used) ++per_segment[segment_of(bounds, s->distance)];
    for (std::size_t k = 0; k < n_segments; ++k) {
        if (per_segment[k] < 2) {
            throw std::domain_error("segment " + std::to_string(k) + " [" +
                                    std::to_string(bounds[k]) + ", " +
                                    std::to_string(bounds[k + 1]) + "] m has " +
                                    std::to_string(per_segment[k]) +
                                    " sample(s); at least 2 are required");
        }
    }

    // Parameters: theta = (A, n_0 .. n_{K-1}) with
    //   snr(r in seg k) = A - sum_{j<k} c_j n_j - 10 n_k log10(r / bounds[k]),
    //   c_j = 10 log10(bounds[j+1] / bounds[j]),
    // which bakes continuity at every breakpoint into the design matrix.
    const std::size_t n_params = n_segments + 1;
    std::vector<double> seg_width_db(n_segments, 0.0);
    for (std::size_t k = 0; k < n_segments; ++k) {
        seg_width_db[k] = 10.0 * std::log10(bounds[k + 1] / bounds[k]);
    }

    std::vector<std::vector<double>> ata(n_params, std::vector<double>(n_params, 0.0));
    std::vector<double> atb(n_params, 0.0);
    std::vector<double> row(n_params, 0.0);
    for (const RangeSample* s : used) {
        const std::size_t k = segment_of(bounds, s->distance);
        std::fill(row.begin(), row.end(), 0.0);
        row[0] = 1.0;
        for (std::size_t j = 0; j < k; ++j) row[1 + j] = -seg_width_db[j];
        row[1 + k] += -10.0 * std::log10(s->distance / bounds[k]);
        for (std::size_t i = 0; i < n_params; ++i) {
            for (std::size_t j = 0; j < n_params; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * s->peak_snr_db;
        }
    }
    const std::vector<double> theta = solve_linear(std::move(ata), std::move(atb));

    PathLossModel model;
    double level = theta[0];
    for (std::size_t k = 0; k < n_segments; ++k) {
        model.segments.push_back(PathLossSegment{bounds[k], bounds[k + 1], theta[1 + k], level});
        level -= theta[1 + k] * seg_width_db[k];
    }
    return model;
}

SnrPrediction predict_snr(const PathLossModel& model, double distance) {
    if (!(distance > 0.0)) {
        throw std::domain_error("distance must be positive");
    }
    if (model.segments.empty()) {
        throw std::domain_error("path-loss model has no segments");
    }
    const PathLossSegment* seg = &model.segments.front();
    bool extrapolated = distance < seg->r_min;
    for (const PathLossSegment& s : model.segments) {
        if (distance >= s.r_min) seg = &s;
    }
    if (distance > model.segments.back().r_max) extrapolated = true;
    const double snr = seg->level_at_rmin -
                       10.0 * seg->exponent * std::log10(distance / seg->r_min);
    return SnrPrediction{snr, extrapolated};
}

}  // namespace uwlink
