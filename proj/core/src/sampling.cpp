#include "dqd/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"
#include "dqd/physics.hpp"

namespace dqd {

void TimingConfig::validate() const {
    if (!(measure_time_tm_s > 0.0) || !(measure_time_tm_s < bit_time_tb_s)) {
        throw TimingConfigError("timing requires 0 < t_m < T_b");
    }
    if (num_bits_n < 1) {
        throw TimingConfigError("timing requires N >= 1");
    }
}

TimingReport validate_timing(const TimingConfig& timing, const DeviceParams& device,
                             const TimingStrictness& strictness) {
    timing.validate();
    device.validate();

    TimingReport report;
    auto flag = [&report](std::string id, std::string msg, double ratio) {
        report.violations.push_back({std::move(id), std::move(msg), ratio});
    };

    const double t1 = device.t1_s;
    const double tm = timing.measure_time_tm_s;
    const double tb = timing.bit_time_tb_s;

    // (a) t_m << T1: measurement must not outlast relaxation of the projected state.
    const double measure_limit = t1 / strictness.measure_factor;
    if (tm > measure_limit) {
        flag("measure-window",
             "measurement time t_m exceeds T1/" + std::to_string(strictness.measure_factor),
             measure_limit / tm);
    }

    // (b) the relaxation window must cover several T1 so the state resets.
    const double relax_needed = strictness.relax_factor * t1;
    const double relax_window = tb - tm;
    if (relax_window < relax_needed) {
        flag("relax-window",
             "relaxation window T_b - t_m is shorter than " +
                 std::to_string(strictness.relax_factor) + " * T1",
             relax_window / relax_needed);
    }

    // (c) Zeno guard: T_b >> pi hbar / gamma keeps repeated measurement from
    // freezing the electron transfer dynamics.
    const double zeno_needed =
        strictness.zeno_factor * std::numbers::pi * constants::hbar_ev_s / device.gamma_ev;
    if (tb < zeno_needed) {
        flag("zeno-guard",
             "bit time T_b is below " + std::to_string(strictness.zeno_factor) +
                 " * pi*hbar/gamma",
             tb / zeno_needed);
    }

    report.ok = report.violations.empty();
    return report;
}

double max_bit_rate(const DeviceParams& device) {
    device.validate();
    return 1.0 / device.t1_s;
}

TimingConfig default_timing(const DeviceParams& device, std::uint64_t num_bits,
                            const TimingStrictness& strictness) {
    device.validate();
    TimingConfig t;
    t.measure_time_tm_s = device.t1_s / strictness.measure_factor;
    const double zeno_floor =
        strictness.zeno_factor * std::numbers::pi * constants::hbar_ev_s / device.gamma_ev;
    t.bit_time_tb_s =
        std::max(t.measure_time_tm_s + strictness.relax_factor * device.t1_s, zeno_floor);
    t.num_bits_n = num_bits;
    return t;
}

int sample_bit(double p0, double p1, BitRng& rng) {
    if (!(std::abs(p0 + p1 - 1.0) < 1e-9)) {
        throw std::domain_error("measurement probabilities must sum to 1");
    }
    return rng.uniform() < p1 ? 1 : 0;
}

std::pair<double, double> measurement_probabilities(const DeviceParams& device,
                                                    double detuning_ev) {
    device.validate();
    if (device.mode == StatisticsMode::thermal_boltzmann) {
        return thermal_probabilities(detuning_ev, device.temperature_ev);
    }
    const GroundState gs = ground_state(device.gamma_ev, detuning_ev);
    return {gs.p0, gs.p1};
}

BitStream generate_stream(const DeviceParams& device, double detuning_ev,
                          const TimingConfig& timing, std::uint64_t seed,
                          bool ideal_relaxation) {
    timing.validate();
    const auto [p0, p1] = measurement_probabilities(device, detuning_ev);

    BitStream stream;
    stream.seed = seed;
    stream.detuning_ev = detuning_ev;
    stream.device = device;
    stream.timing = timing;
    stream.ideal_relaxation = ideal_relaxation;
    stream.bits.resize(timing.num_bits_n);

    BitRng rng(seed);

    if (ideal_relaxation) {
        for (auto& b : stream.bits) {
            b = static_cast<std::uint8_t>(sample_bit(p0, p1, rng));
        }
        return stream;
    }

    // Carryover branch: if the DQD fails to relax inside the window T_b - t_m,
    // the next projective measurement repeats the previous outcome.
    const double relax_window = timing.bit_time_tb_s - timing.measure_time_tm_s;
    const double carryover_prob = std::exp(-relax_window / device.t1_s);

    int previous = sample_bit(p0, p1, rng);
    stream.bits[0] = static_cast<std::uint8_t>(previous);
    for (std::uint64_t i = 1; i < timing.num_bits_n; ++i) {
        const bool frozen = rng.uniform() < carryover_prob;
        if (!frozen) {
            previous = sample_bit(p0, p1, rng);
        }
        stream.bits[i] = static_cast<std::uint8_t>(previous);
    }
    return stream;
}

}  // namespace dqd
