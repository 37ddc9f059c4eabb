#include "uwlink/antenna.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "uwlink/constants.hpp"

namespace uwlink {

namespace {

void check_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::domain_error(std::string(name) + " must be positive (got " +
                                std::to_string(value) + ")");
    }
}

}  // namespace

void LaminateSpec::validate() const {
    check_positive(length, "laminate length");
    check_positive(young_pzt, "piezo Young's modulus");
    check_positive(young_metglas, "magnetostrictive Young's modulus");
    check_positive(vol_frac_pzt, "piezo volume fraction");
    check_positive(vol_frac_metglas, "magnetostrictive volume fraction");
    check_positive(density_pzt, "piezo density");
    check_positive(density_metglas, "magnetostrictive density");
    check_positive(piezo_thickness, "piezo thickness");
    if (std::abs(vol_frac_pzt + vol_frac_metglas - 1.0) > 1e-9) {
        throw std::domain_error("volume fractions must sum to 1 (got " +
                                std::to_string(vol_frac_pzt + vol_frac_metglas) + ")");
    }
}

LaminateSpec pzt5j_metglas_sample() {
    LaminateSpec s;
    s.length = 45.7e-3;
    s.young_pzt = 51e9;
    s.young_metglas = 110e9;
    s.vol_frac_pzt = 0.6;
    s.vol_frac_metglas = 0.4;
    s.density_pzt = 7800.0;
    s.density_metglas = 7180.0;
    s.piezo_thickness = 150e-6;
    return s;
}

double resonance_frequency(const LaminateSpec& spec) {
    spec.validate();
    const double stiffness = spec.vol_frac_pzt * spec.young_pzt +
                             spec.vol_frac_metglas * spec.young_metglas;
    const double density = spec.vol_frac_pzt * spec.density_pzt +
                           spec.vol_frac_metglas * spec.density_metglas;
    return std::sqrt(stiffness / density) / (2.0 * spec.length);
}

double me_coefficient(double delta_voltage, double delta_field_a_per_m,
                      double piezo_thickness) {
    if (delta_field_a_per_m == 0.0) {
        throw std::domain_error("field increment must be nonzero");
    }
    check_positive(piezo_thickness, "piezo thickness");
    return delta_voltage / (delta_field_a_per_m * piezo_thickness);
}

double me_coefficient_tesla(double delta_voltage, double delta_field_tesla,
                            double piezo_thickness) {
    return me_coefficient(delta_voltage, delta_field_tesla / MU0, piezo_thickness);
}

void Resonator::validate() const {
    check_positive(f0, "resonance frequency");
    check_positive(quality_q, "quality factor");
    check_positive(r_resonance, "resonance resistance");
    check_positive(c_static, "static capacitance");
}

double Resonator::effective_f0(double drive_amplitude) const {
    return f0 + softening_coeff * drive_amplitude * drive_amplitude;
}

ArraySpec make_array(const Resonator& element, std::size_t n, Wiring wiring) {
    ArraySpec a;
    a.elements.assign(n, element);
    a.wiring = wiring;
    return a;
}

ArraySpec make_jittered_array(const Resonator& base, std::size_t n, Wiring wiring,
                              double f0_jitter, double r_jitter, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto uniform_pm1 = [&gen]() {
        // [-1, 1) from the top 53 bits; avoids unspecified distribution behavior
        return 2.0 * ((gen() >> 11) * 0x1.0p-53) - 1.0;
    };
    ArraySpec a;
    a.wiring = wiring;
    a.elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Resonator r = base;
        r.f0 = base.f0 * (1.0 + f0_jitter * uniform_pm1());
        r.r_resonance = base.r_resonance * (1.0 + r_jitter * uniform_pm1());
        r.validate();
        a.elements.push_back(r);
    }
    return a;
}

std::complex<double> motional_impedance(const Resonator& resonator, double frequency_hz,
                                        double drive_amplitude) {
    resonator.validate();
    check_positive(frequency_hz, "frequency");
    if (drive_amplitude < 0.0) {
        throw std::domain_error("drive amplitude must be non-negative");
    }
    const double f0_eff = resonator.effective_f0(drive_amplitude);
    check_positive(f0_eff, "effective resonance frequency");
    const double omega0 = 2.0 * PI * f0_eff;
    const double l_m = resonator.quality_q * resonator.r_resonance / omega0;
    const double c_m = 1.0 / (omega0 * omega0 * l_m);
    const double omega = 2.0 * PI * frequency_hz;
    return {resonator.r_resonance, omega * l_m - 1.0 / (omega * c_m)};
}

std::complex<double> impedance(const Resonator& resonator, double frequency_hz,
                               double drive_amplitude) {
    const std::complex<double> z_mot = motional_impedance(resonator, frequency_hz,
                                                          drive_amplitude);
    const double omega = 2.0 * PI * frequency_hz;
    const std::complex<double> z_static{0.0, -1.0 / (omega * resonator.c_static)};
    return z_mot * z_static / (z_mot + z_static);
}

namespace {

template <typename Impedance>
std::complex<double> combine(const ArraySpec& array, Impedance z_of) {
    if (array.elements.empty()) {
        throw std::domain_error("array must contain at least one element");
    }
    if (array.wiring == Wiring::Series) {
        std::complex<double> sum{0.0, 0.0};
        for (const Resonator& r : array.elements) sum += z_of(r);
        return sum;
    }
    std::complex<double> admittance{0.0, 0.0};
    for (const Resonator& r : array.elements) admittance += 1.0 / z_of(r);
    return 1.0 / admittance;
}

}  // namespace

// H = R_ref / Z_mot where R_ref is the wiring-combined motional resistance,
// so |H| = 1 at resonance for identical elements.
std::complex<double> motional_transfer(const ArraySpec& array, double frequency_hz) {
    const std::complex<double> z_mot =
        combine(array, [&](const Resonator& r) { return motional_impedance(r, frequency_hz); });
    double r_ref = 0.0;
    if (array.wiring == Wiring::Series) {
        for (const Resonator& r : array.elements) r_ref += r.r_resonance;
    } else {
        for (const Resonator& r : array.elements) r_ref += 1.0 / r.r_resonance;
        r_ref = 1.0 / r_ref;
    }
    return r_ref / z_mot;
}

std::complex<double> array_impedance(const ArraySpec& array, double frequency_hz,
                                     double drive_amplitude) {
    return combine(array, [&](const Resonator& r) {
        return impedance(r, frequency_hz, drive_amplitude);
    });
}

FrequencyResponse frequency_response(const ArraySpec& array, double frequency_hz) {
    check_positive(frequency_hz, "frequency");
    const std::complex<double> h = motional_transfer(array, frequency_hz);

    const double step_hz = 1.0;
    const double f_lo = frequency_hz > step_hz ? frequency_hz - step_hz : frequency_hz / 2.0;
    const double f_hi = frequency_hz + step_hz;
    // Re(Z_mot) > 0 keeps the phase inside (-pi/2, pi/2); no unwrap needed.
    const double phi_lo = std::arg(motional_transfer(array, f_lo));
    const double phi_hi = std::arg(motional_transfer(array, f_hi));
    const double group_delay = -(phi_hi - phi_lo) / (2.0 * PI * (f_hi - f_lo));

    return FrequencyResponse{std::abs(h), std::arg(h), group_delay};
}

}  // namespace uwlink
