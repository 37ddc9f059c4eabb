#include "uwlink/medium.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace uwlink {

void ConductiveMedium::validate() const {
    if (!(conductivity > 0.0)) {
        throw std::domain_error("medium conductivity must be positive (got " +
                                std::to_string(conductivity) + " S/m)");
    }
    if (!(permeability > 0.0)) {
        throw std::domain_error("medium permeability must be positive");
    }
    if (!(relative_permittivity >= 1.0)) {
        throw std::domain_error("relative permittivity must be >= 1");
    }
}

ConductiveMedium make_water(double conductivity_s_per_m, std::string label) {
    ConductiveMedium m;
    m.conductivity = conductivity_s_per_m;
    m.label = std::move(label);
    m.validate();
    return m;
}

namespace {

void check_frequency(double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw std::domain_error("frequency must be positive (got " +
                                std::to_string(frequency_hz) + " Hz)");
    }
}

}  // namespace

PropagationConstants propagation_constants(const ConductiveMedium& medium, double frequency_hz) {
    medium.validate();
    check_frequency(frequency_hz);
    const double beta = std::sqrt(PI * frequency_hz * medium.permeability * medium.conductivity);
    return PropagationConstants{beta, beta, frequency_hz};
}

double wavelength(const ConductiveMedium& medium, double frequency_hz) {
    return 2.0 * PI / propagation_constants(medium, frequency_hz).phase_beta;
}

double attenuation_db_per_m(const ConductiveMedium& medium, double frequency_hz) {
    return propagation_constants(medium, frequency_hz).attenuation_alpha * NEPER_TO_DB;
}

double skin_depth(const ConductiveMedium& medium, double frequency_hz) {
    return 1.0 / propagation_constants(medium, frequency_hz).attenuation_alpha;
}

FieldRegions field_regions(const ConductiveMedium& medium, double frequency_hz) {
    const double lambda = wavelength(medium, frequency_hz);
    return FieldRegions{lambda / (2.0 * PI), lambda, 2.0 * lambda};
}

double conduction_displacement_ratio(const ConductiveMedium& medium, double frequency_hz) {
    medium.validate();
    check_frequency(frequency_hz);
    const double omega = 2.0 * PI * frequency_hz;
    return medium.conductivity / (omega * EPS0 * medium.relative_permittivity);
}

}  // namespace uwlink
