// dqdrng: command-line driver for the DQD random-number-generator simulator.
//
// Subcommands: sweep, sample, stats, fom, sc, convergence. Tables are CSV,
// reports are "key = value" text, bit streams are ascii or packed. Data goes
// to stdout (or --out); diagnostics go to stderr.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dqd/bitio.hpp"
#include "dqd/constants.hpp"
#include "dqd/energy.hpp"
#include "dqd/errors.hpp"
#include "dqd/physics.hpp"
#include "dqd/sampling.hpp"
#include "dqd/stats.hpp"
#include "dqd/stochastic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitStrictTiming = 3;

constexpr double kDefaultThermalKtEv = 8.617e-6;  // ~0.1 K

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& out_path, const std::string& data, bool binary) {
    if (out_path.empty()) {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream f(out_path, binary ? std::ios::binary : std::ios::out);
    if (!f) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

// Device selection shared by the stream-producing subcommands: a named preset
// XOR explicit parameters.
struct DeviceOpts {
    std::string preset;
    double gamma_ev = 0.0;
    double t1_s = 0.0;
    std::string mode;  // "quantum" | "thermal"
    double kt_ev = 0.0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "Device preset (molecular-dfa | metallic)");
        cmd->add_option("--gamma-ev", gamma_ev, "Tunneling energy gamma in eV");
        cmd->add_option("--t1-s", t1_s, "Relaxation time T1 in seconds");
        cmd->add_option("--mode", mode, "Statistics mode: quantum | thermal");
        cmd->add_option("--kt-ev", kt_ev,
                        "Thermal energy kT in eV (default 8.617e-6, ~0.1 K)");
    }

    dqd::DeviceParams resolve() const {
        const bool has_explicit = gamma_ev != 0.0 || t1_s != 0.0 || !mode.empty();
        if (!preset.empty() && has_explicit) {
            throw CLI::ValidationError(
                "give either --preset or explicit --gamma-ev/--t1-s/--mode, not both");
        }
        dqd::DeviceParams dev;
        if (has_explicit) {
            dev.gamma_ev = gamma_ev;
            dev.t1_s = t1_s;
            if (mode.empty() || mode == "quantum") {
                dev.mode = dqd::StatisticsMode::quantum_ground_state;
            } else if (mode == "thermal") {
                dev.mode = dqd::StatisticsMode::thermal_boltzmann;
                dev.temperature_ev = kt_ev != 0.0 ? kt_ev : kDefaultThermalKtEv;
            } else {
                throw CLI::ValidationError("unknown --mode '" + mode + "'");
            }
        } else {
            const std::string name = preset.empty() ? "metallic" : preset;
            const auto& p = dqd::find_preset(name);
            if (!p.params) {
                throw std::domain_error("preset '" + name + "' is a reference row, not a device");
            }
            dev = *p.params;
            if (kt_ev != 0.0) {
                dev.temperature_ev = kt_ev;
            }
        }
        dev.validate();
        return dev;
    }
};

// Bias selection: exactly one of mean, detuning, voltage, field.
struct BiasOpts {
    std::optional<double> mean;
    std::optional<double> delta_ev;
    std::optional<double> voltage_v;
    std::optional<double> field_vpm;
    std::optional<double> sep_nm;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--mean", mean, "Target mean in (0,1), programs the detuning");
        cmd->add_option("--delta-ev", delta_ev, "Detuning in eV");
        cmd->add_option("--voltage-v", voltage_v, "Inter-dot bias voltage in volts");
        cmd->add_option("--field-vpm", field_vpm,
                        "Applied field magnitude in V/m, along the dot axis");
        cmd->add_option("--sep-nm", sep_nm, "Dot separation in nm (with --field-vpm)");
    }

    double resolve(const dqd::DeviceParams& dev) const {
        const int given = (mean ? 1 : 0) + (delta_ev ? 1 : 0) + (voltage_v ? 1 : 0) +
                          (field_vpm ? 1 : 0);
        if (given != 1) {
            throw CLI::ValidationError(
                "give exactly one of --mean, --delta-ev, --voltage-v, --field-vpm");
        }
        if (delta_ev) {
            return *delta_ev;
        }
        if (voltage_v) {
            return dqd::detuning_from_voltage(*voltage_v, dev.mobile_charge_c);
        }
        if (field_vpm) {
            double sep_m;
            if (sep_nm) {
                sep_m = *sep_nm * 1e-9;
            } else {
                const auto& a = dev.dot_separation_m;
                sep_m = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
                if (sep_m == 0.0) {
                    throw CLI::ValidationError("--field-vpm needs --sep-nm for this device");
                }
            }
            return dqd::detuning_from_field({0.0, 0.0, *field_vpm}, {0.0, 0.0, sep_m},
                                            dev.mobile_charge_c);
        }
        return dev.mode == dqd::StatisticsMode::thermal_boltzmann
                   ? dqd::detuning_for_mean_thermal(dev.temperature_ev, *mean)
                   : dqd::detuning_for_mean(dev.gamma_ev, *mean);
    }
};

int cmd_sweep(double min_ratio, double max_ratio, std::size_t points,
              const std::string& out) {
    if (points < 2 || !(min_ratio < max_ratio)) {
        throw CLI::ValidationError("sweep needs --points >= 2 and min < max");
    }
    // The sweep is scale-invariant in gamma; evaluate at gamma = 1 eV.
    const double gamma = 1.0;
    std::ostringstream csv;
    csv << "delta_over_gamma,p0,p1,mean,avg_dissipation_over_gamma\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double x = min_ratio + (max_ratio - min_ratio) *
                                         static_cast<double>(i) /
                                         static_cast<double>(points - 1);
        const auto gs = dqd::ground_state(gamma, x * gamma);
        const double ebar = dqd::avg_energy_dissipation(gamma, x * gamma);
        csv << fmt(x) << ',' << fmt(gs.p0) << ',' << fmt(gs.p1) << ','
            << fmt(gs.p1) << ',' << fmt(ebar) << '\n';
    }
    write_output(out, csv.str(), false);
    return kExitOk;
}

int cmd_sample(const DeviceOpts& dev_opts, const BiasOpts& bias, std::uint64_t n,
               double tb_s, double tm_s, std::uint64_t seed, const std::string& format,
               bool non_ideal, bool strict, const std::string& out) {
    const auto dev = dev_opts.resolve();
    const double delta = bias.resolve(dev);

    dqd::TimingConfig timing = dqd::default_timing(dev, n);
    if (tb_s > 0.0) {
        timing.bit_time_tb_s = tb_s;
    }
    if (tm_s > 0.0) {
        timing.measure_time_tm_s = tm_s;
    }
    timing.num_bits_n = n;

    const auto report = dqd::validate_timing(timing, dev);
    for (const auto& v : report.violations) {
        std::cerr << "timing violation [" << v.constraint_id << "]: " << v.message
                  << " (ratio " << fmt(v.measured_ratio) << ")\n";
    }
    if (!report.ok && strict) {
        return kExitStrictTiming;
    }

    const auto stream = dqd::generate_stream(dev, delta, timing, seed, !non_ideal);
    if (format == "ascii") {
        write_output(out, dqd::to_ascii(stream.bits), false);
    } else if (format == "packed") {
        const auto bytes = dqd::pack_bits(stream.bits);
        write_output(out, std::string(bytes.begin(), bytes.end()), true);
    } else {
        throw CLI::ValidationError("sample --format must be ascii or packed");
    }
    return kExitOk;
}

std::string stats_report(const dqd::StreamStats& s) {
    std::ostringstream r;
    r << "n = " << s.n << '\n'
      << "ones = " << s.ones << '\n'
      << "mean = " << fmt(s.mean) << '\n'
      << "ci95_halfwidth = " << fmt(s.ci95_halfwidth) << '\n'
      << "shannon_entropy_bits = " << fmt(s.shannon_entropy_bits) << '\n'
      << "chi2_freq = " << fmt(s.chi2_freq) << '\n'
      << "runs_z = " << fmt(s.runs_z) << '\n'
      << "degenerate = " << (s.degenerate ? "true" : "false") << '\n';
    r << "lag_autocorr =";
    for (double a : s.lag_autocorr) {
        r << ' ' << fmt(a);
    }
    r << '\n';
    return r.str();
}

int cmd_stats(const std::string& input, const std::string& format, std::size_t max_lag,
              std::optional<double> expected_mean, const std::string& out) {
    const auto bytes = read_file_bytes(input);
    std::vector<std::uint8_t> bits;
    if (format == "ascii") {
        bits = dqd::from_ascii(std::string_view(
            reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } else if (format == "packed") {
        bits = dqd::unpack_bits(bytes);
    } else {
        throw CLI::ValidationError("stats --format must be ascii or packed");
    }
    const auto s = dqd::analyze(bits, max_lag, expected_mean);
    write_output(out, stats_report(s), false);
    return kExitOk;
}

int cmd_fom(const std::string& which, const std::string& out) {
    std::ostringstream csv;
    csv << "preset,t1_s,max_bit_rate_bps,max_avg_power_w\n";
    bool found = false;
    for (const auto& p : dqd::preset_registry()) {
        if (which != "all" && which != p.name) {
            continue;
        }
        found = true;
        const auto fom = dqd::figures_of_merit(p);
        csv << fom.name << ',' << (fom.t1_s ? fmt(*fom.t1_s) : std::string()) << ','
            << fmt(fom.max_bit_rate_bps) << ',' << fmt(fom.max_avg_power_w) << '\n';
    }
    if (!found) {
        throw std::invalid_argument("unknown preset '" + which + "'");
    }
    write_output(out, csv.str(), false);
    return kExitOk;
}

int cmd_sc(const std::string& op, double a, double b, double select_s, std::uint64_t n,
           const DeviceOpts& dev_opts, std::uint64_t seed, const std::string& out) {
    auto dev = dev_opts.resolve();
    const auto sa = dqd::sc_encode(a, n, dev, dqd::derive_seed(seed, 1));
    const auto sb = dqd::sc_encode(b, n, dev, dqd::derive_seed(seed, 2));

    dqd::ScResult result;
    if (op == "multiply") {
        result = dqd::sc_multiply(sa, sb);
    } else if (op == "or") {
        result = dqd::sc_or(sa, sb);
    } else if (op == "add") {
        const auto sel = dqd::sc_encode(select_s, n, dev, dqd::derive_seed(seed, 3));
        result = dqd::sc_scaled_add(sa, sb, sel);
    } else {
        throw CLI::ValidationError("sc op must be multiply, or, add");
    }
    for (const auto& w : result.warnings) {
        std::cerr << "warning: " << w << '\n';
    }

    const double decoded = dqd::sc_decode(result.value);
    const double nd = static_cast<double>(n);
    std::ostringstream r;
    r << "op = " << op << '\n'
      << "n = " << n << '\n'
      << "nominal = " << fmt(result.value.nominal_value) << '\n'
      << "decoded = " << fmt(decoded) << '\n'
      << "ci95_halfwidth = " << fmt(1.96 * std::sqrt(decoded * (1.0 - decoded) / nd))
      << '\n';
    std::cout << r.str();

    if (!out.empty()) {
        auto dump = [](const std::string& path, const dqd::BitStream& s) {
            const auto bytes = dqd::pack_bits(s.bits);
            write_output(path, std::string(bytes.begin(), bytes.end()), true);
        };
        dump(out + ".a.bits", sa.stream);
        dump(out + ".b.bits", sb.stream);
        dump(out + ".result.bits", result.value.stream);
    }
    return kExitOk;
}

int cmd_convergence(const DeviceOpts& dev_opts, const BiasOpts& bias,
                    const std::vector<std::uint64_t>& n_grid, std::uint64_t trials,
                    std::uint64_t seed, const std::string& out) {
    const auto dev = dev_opts.resolve();
    const double delta = bias.resolve(dev);
    const auto rows = dqd::convergence_report(dev, delta, n_grid, trials, seed);
    std::ostringstream csv;
    csv << "n,rms_error,max_error\n";
    for (const auto& row : rows) {
        csv << row.n << ',' << fmt(row.rms_error) << ',' << fmt(row.max_error) << '\n';
    }
    write_output(out, csv.str(), false);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tunable DQD quantum random number generator simulator"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Detuning sweep of the tunable mean");
    double sweep_min = -10.0, sweep_max = 10.0;
    std::size_t sweep_points = 401;
    std::string sweep_out;
    sweep->add_option("--min", sweep_min, "Lower delta/gamma");
    sweep->add_option("--max", sweep_max, "Upper delta/gamma");
    sweep->add_option("--points", sweep_points, "Number of grid points");
    sweep->add_option("--out", sweep_out, "Output file (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "Generate a random bit stream");
    DeviceOpts sample_dev;
    BiasOpts sample_bias;
    sample_dev.add_flags(sample);
    sample_bias.add_flags(sample);
    std::uint64_t sample_n = 1024, sample_seed = 0;
    double sample_tb = 0.0, sample_tm = 0.0;
    std::string sample_format = "ascii", sample_out;
    bool sample_non_ideal = false, sample_strict = false;
    sample->add_option("--n", sample_n, "Number of bits");
    sample->add_option("--tb-s", sample_tb, "Bit time T_b in seconds");
    sample->add_option("--tm-s", sample_tm, "Measurement time t_m in seconds");
    sample->add_option("--seed", sample_seed, "RNG seed (default 0)");
    sample->add_option("--format", sample_format, "ascii | packed");
    sample->add_flag("--non-ideal", sample_non_ideal,
                     "Model incomplete relaxation (Zeno-style carryover)");
    sample->add_flag("--strict", sample_strict, "Exit 3 on timing violations");
    sample->add_option("--out", sample_out, "Output file (default stdout)");

    // stats
    auto* stats = app.add_subcommand("stats", "Analyze a bit stream file");
    std::string stats_input, stats_format = "ascii", stats_out;
    std::size_t stats_max_lag = 10;
    std::optional<double> stats_mean;
    stats->add_option("input", stats_input, "Bit stream file")->required();
    stats->add_option("--format", stats_format, "ascii | packed");
    stats->add_option("--max-lag", stats_max_lag, "Autocorrelation lags to report");
    stats->add_option("--mean", stats_mean, "Programmed mean for the frequency test");
    stats->add_option("--out", stats_out, "Output file (default stdout)");

    // fom
    auto* fom = app.add_subcommand("fom", "Figures-of-merit table");
    std::string fom_which = "all", fom_out;
    fom->add_option("preset", fom_which, "Preset name or 'all'");
    fom->add_option("--out", fom_out, "Output file (default stdout)");

    // sc
    auto* sc = app.add_subcommand("sc", "Stochastic-computing demo");
    std::string sc_op;
    double sc_a = 0.0, sc_b = 0.0, sc_s = 0.5;
    std::uint64_t sc_n = 100000, sc_seed = 0;
    DeviceOpts sc_dev;
    std::string sc_out;
    sc->add_option("op", sc_op, "multiply | or | add")->required();
    sc->add_option("--a", sc_a, "First operand in (0,1)")->required();
    sc->add_option("--b", sc_b, "Second operand in (0,1)")->required();
    sc->add_option("--select-s", sc_s, "Select probability for add");
    sc->add_option("--n", sc_n, "Stream length");
    sc->add_option("--seed", sc_seed, "RNG seed (default 0)");
    sc_dev.add_flags(sc);
    sc->add_option("--out", sc_out, "Stream file prefix (packed encoding)");

    // convergence
    auto* conv = app.add_subcommand("convergence", "Accuracy-versus-speed table");
    DeviceOpts conv_dev;
    BiasOpts conv_bias;
    conv_dev.add_flags(conv);
    conv_bias.add_flags(conv);
    std::vector<std::uint64_t> conv_grid{100, 1000, 10000, 100000};
    std::uint64_t conv_trials = 100, conv_seed = 0;
    std::string conv_out;
    conv->add_option("--n-grid", conv_grid, "Stream lengths to test")->delimiter(',');
    conv->add_option("--trials", conv_trials, "Independent streams per length");
    conv->add_option("--seed", conv_seed, "Base RNG seed (default 0)");
    conv->add_option("--out", conv_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) {
            return cmd_sweep(sweep_min, sweep_max, sweep_points, sweep_out);
        }
        if (sample->parsed()) {
            return cmd_sample(sample_dev, sample_bias, sample_n, sample_tb, sample_tm,
                              sample_seed, sample_format, sample_non_ideal,
                              sample_strict, sample_out);
        }
        if (stats->parsed()) {
            return cmd_stats(stats_input, stats_format, stats_max_lag, stats_mean,
                             stats_out);
        }
        if (fom->parsed()) {
            return cmd_fom(fom_which, fom_out);
        }
        if (sc->parsed()) {
            return cmd_sc(sc_op, sc_a, sc_b, sc_s, sc_n, sc_dev, sc_seed, sc_out);
        }
        if (conv->parsed()) {
            return cmd_convergence(conv_dev, conv_bias, conv_grid, conv_trials,
                                   conv_seed, conv_out);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const dqd::UnreachableBiasError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const dqd::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
