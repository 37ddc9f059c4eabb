#pragma once

namespace uwlink {

inline constexpr double PI = 3.14159265358979323846;

/// Vacuum permeability, H/m.
inline constexpr double MU0 = 4.0e-7 * PI;

/// Vacuum permittivity, F/m.
inline constexpr double EPS0 = 8.8541878128e-12;

/// Field-amplitude neper-to-decibel factor, 20/ln(10).
inline constexpr double NEPER_TO_DB = 8.685889638065035;

}  // namespace uwlink
