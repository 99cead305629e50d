#include "dqd/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"
#include "dqd/physics.hpp"

namespace dqd {

std::pair<double, double> relaxation_energies(double gamma_ev, double delta_ev) {
    if (!(gamma_ev > 0.0)) {
        throw InvalidDeviceError("tunneling energy gamma must be > 0");
    }
    const double root = std::hypot(2.0 * gamma_ev, delta_ev);
    return {0.5 * (root - delta_ev), 0.5 * (root + delta_ev)};
}

double avg_energy_dissipation(double gamma_ev, double delta_ev) {
    if (!(gamma_ev > 0.0)) {
        throw InvalidDeviceError("tunneling energy gamma must be > 0");
    }
    // Grouped so the delta = 0 case yields gamma exactly.
    return gamma_ev * (2.0 * gamma_ev / std::hypot(2.0 * gamma_ev, delta_ev));
}

double avg_energy_dissipation_thermal(double gamma_ev, double delta_ev, double kt_ev) {
    const auto [eps0, eps1] = relaxation_energies(gamma_ev, delta_ev);
    const auto [p0, p1] = thermal_probabilities(delta_ev, kt_ev);
    return p0 * eps0 + p1 * eps1;
}

double avg_power(double gamma_ev, double delta_ev, double n_cycles, double interval_s) {
    if (!(interval_s > 0.0)) {
        throw std::domain_error("interval must be > 0");
    }
    if (n_cycles < 0.0) {
        throw std::domain_error("cycle count must be >= 0");
    }
    return (n_cycles / interval_s) * avg_energy_dissipation(gamma_ev, delta_ev) *
           constants::joules_per_ev;
}

EnergyReport energy_report(const DeviceParams& device, double delta_ev,
                           double bit_rate_bps) {
    device.validate();
    const auto [eps0, eps1] = relaxation_energies(device.gamma_ev, delta_ev);
    const double avg = device.mode == StatisticsMode::thermal_boltzmann
                           ? avg_energy_dissipation_thermal(device.gamma_ev, delta_ev,
                                                            device.temperature_ev)
                           : avg_energy_dissipation(device.gamma_ev, delta_ev);
    EnergyReport r;
    r.eps0_ev = eps0;
    r.eps1_ev = eps1;
    r.avg_dissipation_ev = avg;
    r.bit_rate_bps = bit_rate_bps;
    r.avg_power_w = bit_rate_bps * avg * constants::joules_per_ev;
    return r;
}

FiguresOfMerit figures_of_merit(const DevicePreset& preset) {
    FiguresOfMerit fom;
    fom.name = preset.name;
    if (preset.params) {
        fom.t1_s = preset.params->t1_s;
        fom.max_bit_rate_bps = preset.readout_limited_rate_bps
                                   ? *preset.readout_limited_rate_bps
                                   : 1.0 / preset.params->t1_s;
        // Max power occurs at zero detuning, where the dissipation is gamma per cycle.
        fom.max_avg_power_w =
            fom.max_bit_rate_bps * preset.params->gamma_ev * constants::joules_per_ev;
        return fom;
    }
    if (!preset.fixed_bit_rate_bps || !preset.fixed_max_power_w) {
        throw std::invalid_argument("preset '" + preset.name +
                                    "' has neither physics nor fixed figures of merit");
    }
    fom.max_bit_rate_bps = *preset.fixed_bit_rate_bps;
    fom.max_avg_power_w = *preset.fixed_max_power_w;
    return fom;
}

const std::vector<DevicePreset>& preset_registry() {
    static const std::vector<DevicePreset> presets = [] {
        std::vector<DevicePreset> v;

        DevicePreset molecular;
        molecular.name = "molecular-dfa";
        DeviceParams mp;
        mp.gamma_ev = 50e-3;
        mp.t1_s = 1e-12;
        mp.dot_separation_m = {0.0, 0.0, 0.67e-9};
        mp.mode = StatisticsMode::quantum_ground_state;
        molecular.params = mp;
        molecular.source = "diferrocenyl acetylene molecular DQD";
        v.push_back(molecular);

        DevicePreset metallic;
        metallic.name = "metallic";
        DeviceParams tp;
        tp.gamma_ev = 0.5e-3;
        tp.t1_s = 1.0 / 150e6;  // 6.67 ns, chosen so 1/T1 is exactly 150 Mbps
        tp.temperature_ev = 8.617e-6;  // ~0.1 K; cryogenic operating point
        tp.mode = StatisticsMode::thermal_boltzmann;
        metallic.params = tp;
        metallic.source = "lithographic metal-dot DQD";
        v.push_back(metallic);

        DevicePreset cmos;
        cmos.name = "cmos-sng-reference";
        cmos.source = "32-bit LFSR stochastic number generator, 65-nm CMOS, 100 MHz";
        cmos.fixed_bit_rate_bps = 100e6;
        cmos.fixed_max_power_w = 80.2e-6;
        v.push_back(cmos);

        return v;
    }();
    return presets;
}

const DevicePreset& find_preset(const std::string& name) {
    for (const auto& p : preset_registry()) {
        if (p.name == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace dqd
