#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqd/device.hpp"
#include "dqd/rng.hpp"

namespace dqd {

// One measure-relax cycle: a measurement of duration t_m inside a bit period T_b.
struct TimingConfig {
    double bit_time_tb_s = 0.0;
    double measure_time_tm_s = 0.0;
    std::uint64_t num_bits_n = 1;

    // Throws TimingConfigError unless 0 < t_m < T_b and N >= 1.
    void validate() const;
};

// Multipliers that pin down the order-of-magnitude inequalities t_m << T1,
// T_b - t_m > T1 and T_b >> pi hbar / gamma as concrete checks.
struct TimingStrictness {
    double measure_factor = 10.0;  // t_m <= T1 / measure_factor
    double relax_factor = 5.0;     // T_b - t_m >= relax_factor * T1
    double zeno_factor = 100.0;    // T_b >= zeno_factor * pi hbar / gamma
};

struct TimingViolation {
    std::string constraint_id;  // "measure-window", "relax-window", "zeno-guard"
    std::string message;
    double measured_ratio;  // actual/required; < 1 means violated
};

struct TimingReport {
    bool ok = true;
    std::vector<TimingViolation> violations;
};

// Report-only validation of a timing configuration against a device.
TimingReport validate_timing(const TimingConfig& timing, const DeviceParams& device,
                             const TimingStrictness& strictness = {});

// Upper bit-rate limit 1/T1 in bits/s.
double max_bit_rate(const DeviceParams& device);

// Shortest bit period that clears every default timing check, with t_m = T1/10.
// Convenient default for stream generation when the caller gives no timing.
TimingConfig default_timing(const DeviceParams& device, std::uint64_t num_bits,
                            const TimingStrictness& strictness = {});

// One Born-rule (or thermal) draw: 1 with probability p1.
int sample_bit(double p0, double p1, BitRng& rng);

// Generated bit sequence plus everything needed to regenerate it.
struct BitStream {
    std::vector<std::uint8_t> bits;  // one 0/1 value per element
    std::uint64_t seed = 0;
    double detuning_ev = 0.0;
    DeviceParams device;
    TimingConfig timing;
    bool ideal_relaxation = true;
};

// Measurement probabilities (p0, p1) for the device at the given detuning,
// dispatching on the device's statistics mode.
std::pair<double, double> measurement_probabilities(const DeviceParams& device,
                                                    double detuning_ev);

// Simulates the serial measure-relax cycle. With ideal_relaxation the bits are
// independent draws; otherwise the system relaxes within the window T_b - t_m
// with probability 1 - exp(-(T_b - t_m)/T1), and a failed relaxation freezes
// the next measurement at the previous outcome.
BitStream generate_stream(const DeviceParams& device, double detuning_ev,
                          const TimingConfig& timing, std::uint64_t seed,
                          bool ideal_relaxation = true);

}  // namespace dqd
