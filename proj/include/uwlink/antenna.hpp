#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace uwlink {

/// Geometry and material constants of one magnetoelectric laminate bar
/// (piezoelectric layer bonded to magnetostrictive layers).
struct LaminateSpec {
    double length = 0.0;             ///< bar length L, m
    double young_pzt = 0.0;          ///< Pa
    double young_metglas = 0.0;      ///< Pa
    double vol_frac_pzt = 0.0;       ///< piezo volume fraction
    double vol_frac_metglas = 0.0;   ///< magnetostrictive volume fraction
    double density_pzt = 0.0;        ///< kg/m^3
    double density_metglas = 0.0;    ///< kg/m^3
    double piezo_thickness = 0.0;    ///< piezo layer thickness t, m

    void validate() const;
};

/// PZT-5J / Metglas sample constants of the fabricated 45.7 mm bar.
LaminateSpec pzt5j_metglas_sample();

/// Fundamental length-extensional resonance of the composite bar,
/// f_r = (1/2L) * sqrt(sum(v_i Y_i) / sum(v_i rho_i)).
double resonance_frequency(const LaminateSpec& spec);

/// Magnetoelectric coupling coefficient alpha_ME = (1/t) * (dV/dH),
/// estimated by finite differences. Units (V/m)/(A/m).
double me_coefficient(double delta_voltage, double delta_field_a_per_m, double piezo_thickness);

/// Same, with the field increment given as flux density in tesla (H = B/mu0).
double me_coefficient_tesla(double delta_voltage, double delta_field_tesla,
                            double piezo_thickness);

/// Second-order electrical model of one antenna: a static capacitance in
/// parallel with a motional series-RLC branch. The motional resonance moves
/// with drive amplitude as f0 + softening_coeff * drive^2, which models the
/// spring-softening shift of the peak at high drive. Valid around the
/// fundamental mode (31-41 kHz for the bundled defaults); higher-order modes
/// above ~70 kHz are not represented.
struct Resonator {
    double f0 = 35.5e3;             ///< motional resonance at zero drive, Hz
    double quality_q = 200.0;       ///< dimensionless
    double r_resonance = 500.0;     ///< motional-branch resistance, ohm
    double c_static = 2.0e-9;       ///< static (clamped) capacitance, F
    double softening_coeff = 0.0;   ///< Hz per volt^2, <= 0 for softening

    void validate() const;
    double effective_f0(double drive_amplitude) const;
};

enum class Wiring { Series, Parallel };

struct ArraySpec {
    std::vector<Resonator> elements;
    Wiring wiring = Wiring::Parallel;

    std::size_t n_elements() const { return elements.size(); }
};

/// n identical elements.
ArraySpec make_array(const Resonator& element, std::size_t n, Wiring wiring);

/// n copies of `base` with f0 and r_resonance jittered by uniform relative
/// offsets in [-f0_jitter, +f0_jitter] and [-r_jitter, +r_jitter].
/// Deterministic per seed.
ArraySpec make_jittered_array(const Resonator& base, std::size_t n, Wiring wiring,
                              double f0_jitter, double r_jitter, std::uint64_t seed);

/// Impedance of the motional branch alone, ohm.
std::complex<double> motional_impedance(const Resonator& resonator, double frequency_hz,
                                        double drive_amplitude = 0.0);

/// Full element impedance: static branch in parallel with the motional branch.
std::complex<double> impedance(const Resonator& resonator, double frequency_hz,
                               double drive_amplitude = 0.0);

/// Series wiring sums element impedances; parallel wiring sums admittances.
std::complex<double> array_impedance(const ArraySpec& array, double frequency_hz,
                                     double drive_amplitude = 0.0);

struct FrequencyResponse {
    double gain = 0.0;         ///< normalized motional-branch transfer magnitude
    double phase = 0.0;        ///< rad
    double group_delay = 0.0;  ///< s, -dphi/domega by central difference (1 Hz step)
};

/// Complex small-signal transfer of the radiating (motional) branch of the
/// array, normalized so identical elements give unit gain at resonance.
std::complex<double> motional_transfer(const ArraySpec& array, double frequency_hz);

/// Magnitude/phase/group-delay view of motional_transfer.
FrequencyResponse frequency_response(const ArraySpec& array, double frequency_hz);

}  // namespace uwlink
