#include "dqd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dqd/rng.hpp"
#include "dqd/sampling.hpp"

namespace dqd {

StreamStats analyze(std::span<const std::uint8_t> bits, std::size_t max_lag,
                    std::optional<double> expected_mean) {
    const std::uint64_t n = bits.size();
    if (n < 2) {
        throw std::invalid_argument("analyze requires at least 2 bits");
    }
    if (max_lag >= n) {
        throw std::invalid_argument("max_lag must be smaller than the stream length");
    }

    StreamStats s;
    s.n = n;
    for (auto b : bits) {
        s.ones += b ? 1 : 0;
    }
    const double nd = static_cast<double>(n);
    const double m = static_cast<double>(s.ones) / nd;
    s.mean = m;
    s.ci95_halfwidth = 1.96 * std::sqrt(m * (1.0 - m) / nd);

    s.shannon_entropy_bits =
        (m <= 0.0 || m >= 1.0)
            ? 0.0
            : -m * std::log2(m) - (1.0 - m) * std::log2(1.0 - m);

    const double p = expected_mean.value_or(0.5);
    s.chi2_freq = (static_cast<double>(s.ones) - nd * p) *
                  (static_cast<double>(s.ones) - nd * p) / (nd * p * (1.0 - p));

    s.degenerate = (s.ones == 0 || s.ones == n);
    if (s.degenerate) {
        s.lag_autocorr.assign(max_lag, 0.0);
        s.runs_z = 0.0;
        return s;
    }

    // Biased sample autocorrelation around the sample mean.
    double var = 0.0;
    for (auto b : bits) {
        const double d = static_cast<double>(b) - m;
        var += d * d;
    }
    s.lag_autocorr.resize(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double acc = 0.0;
        for (std::uint64_t i = 0; i + k < n; ++i) {
            acc += (static_cast<double>(bits[i]) - m) *
                   (static_cast<double>(bits[i + k]) - m);
        }
        s.lag_autocorr[k - 1] = acc / var;
    }

    // Wald-Wolfowitz runs test; uses the observed zero/one counts, so biased
    // streams are judged against their own composition.
    std::uint64_t runs = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        if (bits[i] != bits[i - 1]) {
            ++runs;
        }
    }
    const double n1 = static_cast<double>(s.ones);
    const double n0 = nd - n1;
    const double mu = 2.0 * n0 * n1 / nd + 1.0;
    const double sigma2 = 2.0 * n0 * n1 * (2.0 * n0 * n1 - nd) / (nd * nd * (nd - 1.0));
    s.runs_z = (static_cast<double>(runs) - mu) / std::sqrt(sigma2);
    return s;
}

std::vector<ConvergenceRow> convergence_report(const DeviceParams& device,
                                               double detuning_ev,
                                               const std::vector<std::uint64_t>& n_grid,
                                               std::uint64_t trials, std::uint64_t seed) {
    if (trials < 10) {
        throw std::invalid_argument("convergence_report requires trials >= 10");
    }
    const auto [p0, p1] = measurement_probabilities(device, detuning_ev);
    (void)p0;

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_grid.size());
    std::uint64_t stream_index = 0;
    for (std::uint64_t n : n_grid) {
        TimingConfig timing = default_timing(device, n);
        double sq_sum = 0.0;
        double max_err = 0.0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto stream =
                generate_stream(device, detuning_ev, timing,
                                derive_seed(seed, stream_index++), true);
            std::uint64_t ones = 0;
            for (auto b : stream.bits) {
                ones += b;
            }
            const double err =
                static_cast<double>(ones) / static_cast<double>(n) - p1;
            sq_sum += err * err;
            max_err = std::max(max_err, std::abs(err));
        }
        rows.push_back({n, std::sqrt(sq_sum / static_cast<double>(trials)), max_err});
    }
    return rows;
}

}  // namespace dqd
