#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dqd {

// ascii encoding: one '0'/'1' character per bit, no separators.
std::string to_ascii(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> from_ascii(std::string_view text);

// packed encoding: an 8-byte little-endian bit count, then the bits packed
// LSB-first within each byte, final partial byte zero-padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes);

}  // namespace dqd
