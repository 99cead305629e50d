#include "dqd/bitio.hpp"

#include "dqd/errors.hpp"

namespace dqd {

std::string to_ascii(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::vector<std::uint8_t> from_ascii(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0') {
            bits.push_back(0);
        } else if (c == '1') {
            bits.push_back(1);
        } else {
            throw ParseError("unexpected character in ascii bit stream", i);
        }
    }
    return bits;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
    const std::uint64_t n = bits.size();
    std::vector<std::uint8_t> out(8 + (n + 7) / 8, 0);
    for (int i = 0; i < 8; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n >> (8 * i));
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        if (bits[i]) {
            out[8 + i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
        }
    }
    return out;
}

std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8) {
        throw ParseError("packed stream shorter than the 8-byte count header", bytes.size());
    }
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        n |= static_cast<std::uint64_t>(bytes[static_cast<std::size_t>(i)]) << (8 * i);
    }
    const std::uint64_t payload_bytes = (n + 7) / 8;
    if (bytes.size() != 8 + payload_bytes) {
        const std::size_t offset = bytes.size() < 8 + payload_bytes ? bytes.size() : 8 + payload_bytes;
        throw ParseError("packed payload size does not match the bit count header", offset);
    }
    // Padding bits past n in the final byte must be zero.
    if (n % 8 != 0 && payload_bytes > 0) {
        const std::uint8_t last = bytes[8 + payload_bytes - 1];
        if (last >> (n % 8) != 0) {
            throw ParseError("nonzero padding bits in final packed byte", 8 + payload_bytes - 1);
        }
    }
    std::vector<std::uint8_t> bits(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        bits[i] = (bytes[8 + i / 8] >> (i % 8)) & 1u;
    }
    return bits;
}

}  // namespace dqd
