#pragma once

namespace dqd::constants {

// Reduced Planck constant in eV*s.
inline constexpr double hbar_ev_s = 6.582119569e-16;

// Elementary charge, exact SI value (also the J/eV conversion factor).
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double joules_per_ev = 1.602176634e-19;

}  // namespace dqd::constants
