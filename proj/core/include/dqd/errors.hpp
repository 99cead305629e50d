#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqd {

// Device parameters describe an unphysical or uncoupled DQD (e.g. gamma <= 0).
class InvalidDeviceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested mean of exactly 0 or 1 would require infinite detuning.
class UnreachableBiasError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Timing configuration violates its structural invariants (0 < t_m < T_b, N >= 1).
class TimingConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized bit stream; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

}  // namespace dqd
