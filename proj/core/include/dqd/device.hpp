#pragma once

#include <array>
#include <string>

#include "dqd/constants.hpp"

namespace dqd {

// Randomness mechanism of the device implementation.
enum class StatisticsMode {
    quantum_ground_state,  // Born-rule measurement of the two-level ground state
    thermal_boltzmann,     // equilibrium occupation of the localized states
};

std::string to_string(StatisticsMode mode);

// Physical constants of one double-quantum-dot device. All energies in eV,
// times in seconds, lengths in meters.
struct DeviceParams {
    double gamma_ev = 0.0;  // tunneling energy, must be > 0
    double t1_s = 0.0;      // relaxation time, must be > 0
    std::array<double, 3> dot_separation_m{0.0, 0.0, 0.0};
    double mobile_charge_c = constants::elementary_charge_c;
    double temperature_ev = 0.0;  // kT; required > 0 in thermal mode
    StatisticsMode mode = StatisticsMode::quantum_ground_state;

    // Throws InvalidDeviceError if the parameters are unphysical.
    void validate() const;
};

}  // namespace dqd
