#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dqd/device.hpp"

namespace dqd {

struct StreamStats {
    std::uint64_t n = 0;
    std::uint64_t ones = 0;
    double mean = 0.0;
    double ci95_halfwidth = 0.0;
    double shannon_entropy_bits = 0.0;
    std::vector<double> lag_autocorr;  // lags 1..max_lag
    double chi2_freq = 0.0;
    double runs_z = 0.0;
    // Set for an all-equal stream, where runs_z and the autocorrelations have
    // no defined value; those fields are then reported as 0 instead of NaN.
    bool degenerate = false;
};

// Computes the full battery over a bit sequence. The frequency chi^2 is taken
// against expected_mean when given (the programmed mean of a biased stream),
// against 0.5 otherwise; runs and autocorrelation are bias-aware by
// construction (they use the observed counts / sample mean).
StreamStats analyze(std::span<const std::uint8_t> bits, std::size_t max_lag,
                    std::optional<double> expected_mean = std::nullopt);

struct ConvergenceRow {
    std::uint64_t n;
    double rms_error;
    double max_error;
};

// Accuracy-versus-speed table: for each N in n_grid, generates `trials` ideal
// streams with derived seeds and reports the RMS and max deviation of the
// sample mean from the analytic mean.
std::vector<ConvergenceRow> convergence_report(const DeviceParams& device,
                                               double detuning_ev,
                                               const std::vector<std::uint64_t>& n_grid,
                                               std::uint64_t trials, std::uint64_t seed);

}  // namespace dqd
