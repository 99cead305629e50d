#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqd/device.hpp"

namespace dqd {

struct EnergyReport {
    double eps0_ev;
    double eps1_ev;
    double avg_dissipation_ev;  // per measure-relax cycle
    double avg_power_w;
    double bit_rate_bps;
};

// Named device configuration. Reference rows (no physics) carry fixed
// figures of merit instead of DeviceParams.
struct DevicePreset {
    std::string name;
    std::optional<DeviceParams> params;
    std::string source;
    // For comparison-only rows, and for devices whose readout electronics cap
    // the bit rate below 1/T1.
    std::optional<double> fixed_bit_rate_bps;
    std::optional<double> fixed_max_power_w;
    std::optional<double> readout_limited_rate_bps;
};

struct FiguresOfMerit {
    std::string name;
    std::optional<double> t1_s;
    double max_bit_rate_bps;
    double max_avg_power_w;
};

// Relaxation energies (eps0, eps1) released in |0> -> ground and |1> -> ground
// transitions: eps_x = <x|H|x> - E1.
std::pair<double, double> relaxation_energies(double gamma_ev, double delta_ev);

// Ensemble-average dissipation per cycle, 2 g^2 / sqrt(4 g^2 + d^2) (eV).
double avg_energy_dissipation(double gamma_ev, double delta_ev);

// Thermal-mode average: Boltzmann occupations weighting the same relaxation
// energies.
double avg_energy_dissipation_thermal(double gamma_ev, double delta_ev, double kt_ev);

// Average power over an interval holding n_cycles measure-relax cycles, in watts.
double avg_power(double gamma_ev, double delta_ev, double n_cycles, double interval_s);

// Per-cycle and per-rate energy summary for a device at a given detuning.
EnergyReport energy_report(const DeviceParams& device, double delta_ev, double bit_rate_bps);

// Max bit rate 1/T1 and max average power (at zero detuning) for a preset;
// reference rows report their fixed figures.
FiguresOfMerit figures_of_merit(const DevicePreset& preset);

// Built-in presets: molecular-dfa, metallic, cmos-sng-reference.
const std::vector<DevicePreset>& preset_registry();
const DevicePreset& find_preset(const std::string& name);  // throws std::invalid_argument

}  // namespace dqd
