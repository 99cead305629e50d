#pragma once

#include <cstdint>
#include <random>

namespace dqd {

// Deterministic, seedable randomness source for simulated measurements.
// mt19937_64 output is fully specified by the standard, so streams are
// reproducible across platforms and compilers.
class BitRng {
public:
    explicit BitRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// splitmix64; used to derive statistically independent child seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Child seed for stream/trial `index` of a base seed. Distinct indices give
// independent generators; index 0 does not collide with the base itself.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace dqd
