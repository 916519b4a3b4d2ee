#pragma once

namespace gprwi::em {

inline constexpr double c0 = 299792458.0;          // vacuum light speed, m/s
inline constexpr double mu0 = 1.25663706212e-6;    // vacuum permeability
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity
inline constexpr double eta0 = 376.730313668;      // vacuum impedance

}  // namespace gprwi::em
