#pragma once

#include <string>

#include "uwlink/constants.hpp"

namespace uwlink {

/// Electrical properties of the water body the link operates in.
struct ConductiveMedium {
    double permeability = MU0;            ///< H/m
    double conductivity = 0.0;            ///< S/m
    double relative_permittivity = 80.0;  ///< dimensionless
    std::string label;

    /// Throws std::domain_error if conductivity/permeability are not
    /// positive or relative permittivity is below 1.
    void validate() const;
};

/// Water medium with default permeability and relative permittivity 80.
ConductiveMedium make_water(double conductivity_s_per_m, std::string label = "water");

/// Plane-wave propagation constants in a good conductor at low frequency,
/// where displacement current is neglected and the attenuation and phase
/// constants coincide: alpha = beta = sqrt(pi * f * mu * sigma).
struct PropagationConstants {
    double attenuation_alpha = 0.0;  ///< Np/m
    double phase_beta = 0.0;         ///< rad/m
    double frequency = 0.0;          ///< Hz
};

/// Radial boundaries of the antenna field regions.
struct FieldRegions {
    double reactive_near_limit = 0.0;   ///< lambda/2pi, m
    double radiative_near_limit = 0.0;  ///< lambda, m
    double transition_limit = 0.0;      ///< 2*lambda, m
};

PropagationConstants propagation_constants(const ConductiveMedium& medium, double frequency_hz);

/// Wavelength lambda = 2*pi/beta, m.
double wavelength(const ConductiveMedium& medium, double frequency_hz);

/// Field-amplitude attenuation rate, dB/m (alpha in Np/m times 20/ln 10).
double attenuation_db_per_m(const ConductiveMedium& medium, double frequency_hz);

/// Skin depth 1/alpha, m.
double skin_depth(const ConductiveMedium& medium, double frequency_hz);

FieldRegions field_regions(const ConductiveMedium& medium, double frequency_hz);

/// Conduction-to-displacement current ratio sigma/(omega*eps0*eps_r).
/// The neglected-displacement-current approximation degrades when this
/// drops below QUASI_STATIC_MIN_RATIO; callers should warn, not fail.
double conduction_displacement_ratio(const ConductiveMedium& medium, double frequency_hz);

inline constexpr double QUASI_STATIC_MIN_RATIO = 10.0;

}  // namespace uwlink
