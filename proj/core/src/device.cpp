#include "dqd/device.hpp"

#include "dqd/errors.hpp"

namespace dqd {

std::string to_string(StatisticsMode mode) {
    switch (mode) {
        case StatisticsMode::quantum_ground_state:
            return "quantum";
        case StatisticsMode::thermal_boltzmann:
            return "thermal";
    }
    return "unknown";
}

void DeviceParams::validate() const {
    if (!(gamma_ev > 0.0)) {
        throw InvalidDeviceError("tunneling energy gamma must be > 0 (uncoupled dots)");
    }
    if (!(t1_s > 0.0)) {
        throw InvalidDeviceError("relaxation time T1 must be > 0");
    }
    if (mode == StatisticsMode::thermal_boltzmann && !(temperature_ev > 0.0)) {
        throw InvalidDeviceError("thermal mode requires temperature kT > 0");
    }
}

}  // namespace dqd
