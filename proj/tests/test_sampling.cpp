#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dqd/constants.hpp"
#include "dqd/energy.hpp"
#include "dqd/errors.hpp"
#include "dqd/physics.hpp"
#include "dqd/sampling.hpp"

using namespace dqd;

namespace {

DeviceParams metallic() { return *find_preset("metallic").params; }
DeviceParams molecular() { return *find_preset("molecular-dfa").params; }

DeviceParams quantum_unit_device() {
    DeviceParams d;
    d.gamma_ev = 1.0;
    d.t1_s = 1e-9;
    return d;
}

double stream_mean(const BitStream& s) {
    std::uint64_t ones = 0;
    for (auto b : s.bits) {
        ones += b;
    }
    return static_cast<double>(ones) / static_cast<double>(s.bits.size());
}

double lag1_autocorr(const BitStream& s) {
    const double m = stream_mean(s);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < s.bits.size(); ++i) {
        const double d = s.bits[i] - m;
        den += d * d;
        if (i + 1 < s.bits.size()) {
            num += d * (s.bits[i + 1] - m);
        }
    }
    return num / den;
}

// Independent oracle for the carryover model: a two-state Markov chain whose
// next state repeats the previous one with probability r, else refreshes from
// Bernoulli(p). Lag-1 autocorrelation from the transition matrix.
double markov_chain_lag1(double r, double p) {
    const double t11 = r + (1.0 - r) * p;  // P(1 -> 1)
    const double t01 = (1.0 - r) * p;      // P(0 -> 1)
    const double pi1 = t01 / (1.0 - t11 + t01);
    const double exy = pi1 * t11;  // E[X_n X_{n+1}]
    return (exy - pi1 * pi1) / (pi1 * (1.0 - pi1));
}

}  // namespace

TEST_CASE("timing config invariants") {
    TimingConfig t{1e-9, 2e-9, 10};  // t_m > T_b
    CHECK_THROWS_AS(t.validate(), TimingConfigError);
    t = {1e-9, 0.0, 10};
    CHECK_THROWS_AS(t.validate(), TimingConfigError);
    t = {1e-9, 1e-10, 0};
    CHECK_THROWS_AS(t.validate(), TimingConfigError);
    t = {1e-9, 1e-10, 1};
    CHECK_NOTHROW(t.validate());
}

TEST_CASE("validate_timing checks") {
    SUBCASE("metallic reference point passes everything") {
        const auto report =
            validate_timing({100e-9, 0.5e-9, 1000}, metallic());
        CHECK(report.ok);
        CHECK(report.violations.empty());
    }
    SUBCASE("T_b = T1 trips the relax window") {
        auto dev = metallic();
        const auto report = validate_timing({dev.t1_s, dev.t1_s / 20.0, 10}, dev);
        CHECK_FALSE(report.ok);
        bool relax_flagged = false;
        for (const auto& v : report.violations) {
            if (v.constraint_id == "relax-window") {
                relax_flagged = true;
                CHECK(v.measured_ratio < 1.0);
            }
        }
        CHECK(relax_flagged);
    }
    SUBCASE("molecular 1 ps bit time is Zeno-marginal") {
        auto dev = molecular();
        // pi hbar / gamma ~ 41.3 fs; 1 ps fails the default 100x guard.
        const double zeno_scale =
            std::numbers::pi * constants::hbar_ev_s / dev.gamma_ev;
        CHECK(zeno_scale == doctest::Approx(4.135e-14).epsilon(1e-3));

        TimingConfig t{1e-12, 0.05e-12, 10};
        auto report = validate_timing(t, dev);
        bool zeno_flagged = false;
        for (const auto& v : report.violations) {
            zeno_flagged |= v.constraint_id == "zeno-guard";
        }
        CHECK(zeno_flagged);

        TimingStrictness relaxed;
        relaxed.zeno_factor = 10.0;
        report = validate_timing(t, dev, relaxed);
        for (const auto& v : report.violations) {
            CHECK(v.constraint_id != "zeno-guard");
        }
    }
}

TEST_CASE("max bit rate is 1/T1") {
    CHECK(max_bit_rate(metallic()) == doctest::Approx(150e6).epsilon(1e-12));
    CHECK(max_bit_rate(molecular()) == doctest::Approx(1e12).epsilon(1e-12));
    DeviceParams slow = quantum_unit_device();
    slow.t1_s = 1.0;
    CHECK(max_bit_rate(slow) == 1.0);
}

TEST_CASE("default timing satisfies the report") {
    for (const auto& dev : {metallic(), molecular(), quantum_unit_device()}) {
        const auto t = default_timing(dev, 128);
        CHECK(validate_timing(t, dev).ok);
    }
}

TEST_CASE("sample_bit degenerate distributions") {
    BitRng rng(1234);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_bit(1.0, 0.0, rng) == 0);
        CHECK(sample_bit(0.0, 1.0, rng) == 1);
    }
}

TEST_CASE("sample_bit fair-coin mean within binomial CI") {
    BitRng rng(7);
    const std::uint64_t n = 1'000'000;
    std::uint64_t ones = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        ones += sample_bit(0.5, 0.5, rng);
    }
    const double mean = static_cast<double>(ones) / n;
    CHECK(std::abs(mean - 0.5) < 4.0 * 0.5 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("generate_stream determinism") {
    const auto dev = quantum_unit_device();
    const auto t = default_timing(dev, 4096);
    const auto a = generate_stream(dev, 0.3, t, 42, true);
    const auto b = generate_stream(dev, 0.3, t, 42, true);
    CHECK(a.bits == b.bits);
    const auto c = generate_stream(dev, 0.3, t, 43, true);
    CHECK(a.bits != c.bits);
    CHECK(a.bits.size() == 4096);

    const auto d = generate_stream(dev, 0.3, t, 42, false);
    const auto e = generate_stream(dev, 0.3, t, 42, false);
    CHECK(d.bits == e.bits);
}

TEST_CASE("ideal stream hits the programmed mean") {
    const auto dev = quantum_unit_device();
    const std::uint64_t n = 1'000'000;
    const auto t = default_timing(dev, n);
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double delta = detuning_for_mean(dev.gamma_ev, p);
        const auto s = generate_stream(dev, delta, t, 1000 + static_cast<int>(100 * p), true);
        const double tol = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
        CHECK(std::abs(stream_mean(s) - p) < tol);
    }
}

TEST_CASE("ideal streams are serially uncorrelated") {
    const auto dev = quantum_unit_device();
    const std::uint64_t n = 1'000'000;
    const auto stream = generate_stream(dev, 0.0, default_timing(dev, n), 99, true);
    const double m = stream_mean(stream);
    const double bound = 4.0 / std::sqrt(static_cast<double>(n));
    double den = 0.0;
    for (auto b : stream.bits) {
        den += (b - m) * (b - m);
    }
    for (std::size_t k = 1; k <= 10; ++k) {
        double num = 0.0;
        for (std::size_t i = 0; i + k < stream.bits.size(); ++i) {
            num += (stream.bits[i] - m) * (stream.bits[i + k] - m);
        }
        CHECK(std::abs(num / den) < bound);
    }
}

TEST_CASE("non-ideal carryover matches the Markov-chain oracle") {
    auto dev = quantum_unit_device();
    const std::uint64_t n = 1'000'000;

    SUBCASE("ratio 1 at zero detuning: lag-1 = 1/e") {
        TimingConfig t;
        t.measure_time_tm_s = dev.t1_s / 10.0;
        t.bit_time_tb_s = t.measure_time_tm_s + dev.t1_s;  // window = T1
        t.num_bits_n = n;
        const auto s = generate_stream(dev, 0.0, t, 5, false);
        const double oracle = markov_chain_lag1(std::exp(-1.0), 0.5);
        CHECK(oracle == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
        CHECK(std::abs(lag1_autocorr(s) - oracle) < 0.01);
    }

    SUBCASE("lag-1 decreases monotonically with the relax window") {
        double prev = 1.0;
        for (double ratio : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            TimingConfig t;
            t.measure_time_tm_s = dev.t1_s / 10.0;
            t.bit_time_tb_s = t.measure_time_tm_s + ratio * dev.t1_s;
            t.num_bits_n = n;
            const auto s = generate_stream(dev, 0.0, t, 17, false);
            const double rho = lag1_autocorr(s);
            const double r = std::exp(-ratio);
            const double oracle = markov_chain_lag1(r, 0.5);
            // 3 standard errors of the lag-1 estimator for an AR-like chain.
            const double se = std::sqrt((1.0 - r * r) / static_cast<double>(n));
            CHECK(std::abs(rho - oracle) < 3.0 * se + 1e-4);
            CHECK(rho < prev);
            prev = rho;
        }
    }

    SUBCASE("ratio 10: effectively uncorrelated") {
        TimingConfig t;
        t.measure_time_tm_s = dev.t1_s / 10.0;
        t.bit_time_tb_s = t.measure_time_tm_s + 10.0 * dev.t1_s;
        t.num_bits_n = n;
        const auto s = generate_stream(dev, 0.0, t, 5, false);
        CHECK(std::abs(lag1_autocorr(s)) < 0.001);
    }
}

TEST_CASE("thermal mode stream") {
    auto dev = metallic();
    const std::uint64_t n = 1'000'000;
    const double delta = dev.temperature_ev;  // delta = kT
    const double p1 = 1.0 / (1.0 + std::exp(1.0));
    const auto s = generate_stream(dev, delta, default_timing(dev, n), 3, true);
    const double tol = 4.0 * std::sqrt(p1 * (1.0 - p1) / static_cast<double>(n));
    CHECK(std::abs(stream_mean(s) - p1) < tol);
}

TEST_CASE("generate_stream rejects invalid configs") {
    const auto dev = quantum_unit_device();
    TimingConfig bad{1e-9, 2e-9, 10};
    CHECK_THROWS_AS(generate_stream(dev, 0.0, bad, 0, true), TimingConfigError);

    DeviceParams uncoupled = dev;
    uncoupled.gamma_ev = 0.0;
    CHECK_THROWS_AS(generate_stream(uncoupled, 0.0, default_timing(dev, 8), 0, true),
                    InvalidDeviceError);
}
