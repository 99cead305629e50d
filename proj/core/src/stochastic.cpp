#include "dqd/stochastic.hpp"

#include <stdexcept>

#include "dqd/physics.hpp"

namespace dqd {

namespace {

void require_same_length(const StochasticNumber& a, const StochasticNumber& b) {
    if (a.stream.bits.size() != b.stream.bits.size()) {
        throw std::invalid_argument("stochastic operands must have equal lengths");
    }
}

void warn_if_correlated(const StochasticNumber& a, const StochasticNumber& b,
                        std::vector<std::string>& warnings) {
    if (a.stream.seed == b.stream.seed) {
        warnings.push_back(
            "operands share seed " + std::to_string(a.stream.seed) +
            "; correlated inputs bias the result");
    }
}

StochasticNumber make_derived(const StochasticNumber& a, std::vector<std::uint8_t> bits,
                              double nominal) {
    StochasticNumber out;
    out.stream = a.stream;
    out.stream.bits = std::move(bits);
    out.nominal_value = nominal;
    return out;
}

}  // namespace

StochasticNumber sc_encode(double value, std::uint64_t n, const DeviceParams& device,
                           std::uint64_t seed) {
    device.validate();
    const double delta = device.mode == StatisticsMode::thermal_boltzmann
                             ? detuning_for_mean_thermal(device.temperature_ev, value)
                             : detuning_for_mean(device.gamma_ev, value);
    StochasticNumber sn;
    sn.stream = generate_stream(device, delta, default_timing(device, n), seed, true);
    sn.nominal_value = value;
    return sn;
}

double sc_decode(const StochasticNumber& sn) {
    const auto& bits = sn.stream.bits;
    if (bits.empty()) {
        throw std::invalid_argument("cannot decode an empty stream");
    }
    std::uint64_t ones = 0;
    for (auto b : bits) {
        ones += b;
    }
    return static_cast<double>(ones) / static_cast<double>(bits.size());
}

ScResult sc_multiply(const StochasticNumber& a, const StochasticNumber& b) {
    require_same_length(a, b);
    ScResult r;
    warn_if_correlated(a, b, r.warnings);
    std::vector<std::uint8_t> bits(a.stream.bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = a.stream.bits[i] & b.stream.bits[i];
    }
    r.value = make_derived(a, std::move(bits), a.nominal_value * b.nominal_value);
    return r;
}

ScResult sc_or(const StochasticNumber& a, const StochasticNumber& b) {
    require_same_length(a, b);
    ScResult r;
    warn_if_correlated(a, b, r.warnings);
    std::vector<std::uint8_t> bits(a.stream.bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = a.stream.bits[i] | b.stream.bits[i];
    }
    r.value = make_derived(
        a, std::move(bits),
        a.nominal_value + b.nominal_value - a.nominal_value * b.nominal_value);
    return r;
}

ScResult sc_scaled_add(const StochasticNumber& a, const StochasticNumber& b,
                       const StochasticNumber& select) {
    require_same_length(a, b);
    require_same_length(a, select);
    ScResult r;
    warn_if_correlated(a, b, r.warnings);
    warn_if_correlated(a, select, r.warnings);
    warn_if_correlated(b, select, r.warnings);
    std::vector<std::uint8_t> bits(a.stream.bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = select.stream.bits[i] ? a.stream.bits[i] : b.stream.bits[i];
    }
    const double s = select.nominal_value;
    r.value = make_derived(a, std::move(bits),
                           s * a.nominal_value + (1.0 - s) * b.nominal_value);
    return r;
}

}  // namespace dqd
