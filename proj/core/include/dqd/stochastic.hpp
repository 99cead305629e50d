#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqd/sampling.hpp"

namespace dqd {

// A value in [0,1] carried as the mean of a bit stream (unipolar encoding).
struct StochasticNumber {
    BitStream stream;
    double nominal_value = 0.0;
};

// Warnings from a stochastic operation (e.g. correlated operands). The result
// stream is produced regardless.
struct ScResult {
    StochasticNumber value;
    std::vector<std::string> warnings;
};

// Programs the device detuning for the requested mean and generates an ideal
// stream of n bits. Endpoint values 0 and 1 throw UnreachableBiasError.
StochasticNumber sc_encode(double value, std::uint64_t n, const DeviceParams& device,
                           std::uint64_t seed);

// Empirical mean of the stream.
double sc_decode(const StochasticNumber& sn);

// Bitwise AND: multiplies independent unipolar values.
ScResult sc_multiply(const StochasticNumber& a, const StochasticNumber& b);

// Bitwise OR: decodes to a + b - ab for independent operands.
ScResult sc_or(const StochasticNumber& a, const StochasticNumber& b);

// Multiplexer: bit_i = select_i ? a_i : b_i, scaled addition s*a + (1-s)*b.
ScResult sc_scaled_add(const StochasticNumber& a, const StochasticNumber& b,
                       const StochasticNumber& select);

}  // namespace dqd
