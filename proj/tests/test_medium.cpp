#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "uwlink/constants.hpp"
#include "uwlink/medium.hpp"

using namespace uwlink;

namespace {

// Independent oracle: direct evaluation of sqrt(pi * f * mu * sigma).
double beta_oracle(double frequency, double mu, double sigma) {
    return std::sqrt(PI * frequency * mu * sigma);
}

const ConductiveMedium kFreshwater = make_water(0.0097, "freshwater");
const ConductiveMedium kSaltwater = make_water(4.818, "saltwater");

}  // namespace

TEST_CASE("propagation constants match the closed form") {
    const auto fresh = propagation_constants(kFreshwater, 36e3);
    CHECK(fresh.phase_beta == doctest::Approx(beta_oracle(36e3, MU0, 0.0097)).epsilon(1e-14));
    CHECK(fresh.phase_beta == doctest::Approx(0.03713).epsilon(1e-3));

    const auto salt = propagation_constants(kSaltwater, 36e3);
    CHECK(salt.phase_beta == doctest::Approx(beta_oracle(36e3, MU0, 4.818)).epsilon(1e-14));
    CHECK(salt.phase_beta == doctest::Approx(0.8275).epsilon(1e-3));

    // consistency oracle: the wavelength implied by beta must hit the
    // published values
    CHECK(2.0 * PI / fresh.phase_beta == doctest::Approx(170.0).epsilon(0.01));
    CHECK(2.0 * PI / salt.phase_beta == doctest::Approx(7.59).epsilon(0.01));
}

TEST_CASE("beta scales as the square root of conductivity") {
    const ConductiveMedium scaled = make_water(4.0 * 0.0097);
    const double base = propagation_constants(kFreshwater, 36e3).phase_beta;
    const double quad = propagation_constants(scaled, 36e3).phase_beta;
    CHECK(quad == doctest::Approx(2.0 * base).epsilon(1e-12));
}

TEST_CASE("alpha equals beta for every input") {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 200; ++i) {
        const double sigma = std::pow(10.0, -4.0 + 5.0 * (gen() >> 11) * 0x1.0p-53);
        const double f = std::pow(10.0, 2.0 + 4.0 * (gen() >> 11) * 0x1.0p-53);
        const auto pc = propagation_constants(make_water(sigma), f);
        CHECK(pc.attenuation_alpha == pc.phase_beta);
    }
}

TEST_CASE("wavelength reproduces the published freshwater and saltwater values") {
    CHECK(wavelength(kFreshwater, 36e3) == doctest::Approx(170.0).epsilon(0.01));
    CHECK(wavelength(kFreshwater, 31e3) == doctest::Approx(182.0).epsilon(0.01));
    CHECK(wavelength(kFreshwater, 41e3) == doctest::Approx(158.0).epsilon(0.01));
    CHECK(wavelength(kSaltwater, 36e3) == doctest::Approx(7.59).epsilon(0.01));
}

TEST_CASE("lambda times beta is 2 pi and the skin-depth identity holds") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        const double sigma = std::pow(10.0, -4.0 + 5.0 * (gen() >> 11) * 0x1.0p-53);
        const double f = std::pow(10.0, 2.0 + 4.0 * (gen() >> 11) * 0x1.0p-53);
        const ConductiveMedium medium = make_water(sigma);
        const auto pc = propagation_constants(medium, f);
        const double lambda = wavelength(medium, f);
        CHECK(lambda * pc.phase_beta == doctest::Approx(2.0 * PI).epsilon(1e-12));
        CHECK(skin_depth(medium, f) ==
              doctest::Approx(lambda / (2.0 * PI)).epsilon(1e-12));
    }
}

TEST_CASE("wavelength decreases in both frequency and conductivity") {
    std::mt19937_64 gen(13);
    auto uniform = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        const double sigma = std::pow(10.0, -4.0 + 5.0 * uniform());
        const double f = std::pow(10.0, 2.0 + 4.0 * uniform());
        const double grow = 1.0 + uniform();
        const ConductiveMedium medium = make_water(sigma);
        CHECK(wavelength(medium, f * grow) < wavelength(medium, f));
        CHECK(wavelength(make_water(sigma * grow), f) < wavelength(medium, f));
    }
}

TEST_CASE("attenuation in dB/m") {
    CHECK(attenuation_db_per_m(kSaltwater, 36e3) == doctest::Approx(7.19).epsilon(1e-3));
    CHECK(attenuation_db_per_m(kFreshwater, 36e3) == doctest::Approx(0.323).epsilon(1e-2));
    // lossless limit
    CHECK(attenuation_db_per_m(make_water(1e-15), 36e3) < 1e-5);
}

TEST_CASE("field region boundaries") {
    const FieldRegions salt = field_regions(kSaltwater, 36e3);
    CHECK(salt.reactive_near_limit == doctest::Approx(1.21).epsilon(0.01));
    CHECK(salt.radiative_near_limit == doctest::Approx(7.59).epsilon(0.01));
    CHECK(salt.transition_limit == doctest::Approx(15.19).epsilon(0.01));

    const FieldRegions fresh = field_regions(kFreshwater, 36e3);
    CHECK(fresh.reactive_near_limit == doctest::Approx(27.0).epsilon(0.01));
    CHECK(fresh.transition_limit == doctest::Approx(340.0).epsilon(0.01));

    std::mt19937_64 gen(17);
    for (int i = 0; i < 100; ++i) {
        const double sigma = std::pow(10.0, -4.0 + 5.0 * (gen() >> 11) * 0x1.0p-53);
        const double f = std::pow(10.0, 2.0 + 4.0 * (gen() >> 11) * 0x1.0p-53);
        const FieldRegions r = field_regions(make_water(sigma), f);
        CHECK(r.reactive_near_limit < r.radiative_near_limit);
        CHECK(r.radiative_near_limit < r.transition_limit);
    }
}

TEST_CASE("domain errors on invalid inputs") {
    CHECK_THROWS_AS(propagation_constants(kFreshwater, 0.0), std::domain_error);
    CHECK_THROWS_AS(propagation_constants(kFreshwater, -1.0), std::domain_error);
    CHECK_THROWS_AS(make_water(0.0), std::domain_error);
    CHECK_THROWS_AS(make_water(-2.0), std::domain_error);

    ConductiveMedium bad = kFreshwater;
    bad.relative_permittivity = 0.5;
    CHECK_THROWS_AS(wavelength(bad, 36e3), std::domain_error);
}

TEST_CASE("quasi-static validity ratio") {
    // VLF water is deep inside the good-conductor regime
    CHECK(conduction_displacement_ratio(kSaltwater, 36e3) > 1e4);
    // a nearly lossless medium at high frequency is not
    ConductiveMedium thin = make_water(1e-6);
    CHECK(conduction_displacement_ratio(thin, 10e6) < QUASI_STATIC_MIN_RATIO);
}
