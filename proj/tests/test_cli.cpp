// End-to-end tests of the dqdrng binary. The binary path comes from the
// DQDRNG_CLI_PATH compile definition set by CMake.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DQDRNG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("sweep emits the documented CSV") {
    const auto r = run("sweep --points 5 --min -10 --max 10");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "delta_over_gamma,p0,p1,mean,avg_dissipation_over_gamma");
    // Middle row is delta/gamma = 0: mean 0.5, dissipation gamma.
    CHECK(rows[3].rfind("0,0.5,0.5,0.5,1", 0) == 0);
}

TEST_CASE("sweep mean column decreases monotonically") {
    const auto r = run("sweep");
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 402);  // header + 401 default points
    double prev = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream row(rows[i]);
        std::string field;
        for (int f = 0; f < 4; ++f) {
            std::getline(row, field, ',');
        }
        const double mean = std::stod(field);
        CHECK(mean < prev);
        prev = mean;
    }
}

TEST_CASE("sample shape and determinism") {
    const auto a = run("sample --mean 0.5 --n 8 --seed 0");
    CHECK(a.exit_code == 0);
    CHECK(a.out.size() == 8);
    for (char c : a.out) {
        CHECK((c == '0' || c == '1'));
    }
    const auto b = run("sample --mean 0.5 --n 8 --seed 0");
    CHECK(a.out == b.out);  // byte-identical reruns
}

TEST_CASE("packed framing from the CLI") {
    const std::string path = tmp_path("packed.bits");
    const auto r = run("sample --mean 0.5 --n 12 --seed 1 --format packed --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(data.size() == 10);  // 8-byte count header + 2 payload bytes
    CHECK(static_cast<unsigned char>(data[0]) == 12);
    std::remove(path.c_str());
}

TEST_CASE("sample output round-trips into stats") {
    const std::string path = tmp_path("roundtrip.bits");
    const auto gen = run("sample --mean 0.25 --n 100000 --seed 3 --preset molecular-dfa "
                         "--format packed --out " + path);
    REQUIRE(gen.exit_code == 0);
    const auto st = run("stats " + path + " --format packed --mean 0.25");
    CHECK(st.exit_code == 0);
    CHECK(st.out.find("n = 100000") != std::string::npos);
    // Mean within the binomial CI of the programmed 0.25.
    const auto rows = lines(st.out);
    double mean = -1.0;
    for (const auto& row : rows) {
        if (row.rfind("mean = ", 0) == 0) {
            mean = std::stod(row.substr(7));
        }
    }
    CHECK(std::abs(mean - 0.25) < 4.0 * std::sqrt(0.25 * 0.75 / 100000.0));
    std::remove(path.c_str());
}

TEST_CASE("stats flags degenerate and malformed inputs") {
    const std::string zeros = tmp_path("zeros.txt");
    {
        std::ofstream f(zeros);
        f << std::string(1000, '0');
    }
    const auto st = run("stats " + zeros);
    CHECK(st.exit_code == 0);
    CHECK(st.out.find("shannon_entropy_bits = 0") != std::string::npos);
    CHECK(st.out.find("degenerate = true") != std::string::npos);
    std::remove(zeros.c_str());

    const std::string bad = tmp_path("bad.bits");
    {
        std::ofstream f(bad, std::ios::binary);
        f << "xyz";  // way too short for a packed header
    }
    const auto parse = run("stats " + bad + " --format packed");
    CHECK(parse.exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("fom table matches the published figures") {
    const auto r = run("fom all");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "preset,t1_s,max_bit_rate_bps,max_avg_power_w");
    CHECK(rows[1].rfind("molecular-dfa,", 0) == 0);
    CHECK(rows[1].find(",1e+12,") != std::string::npos);
    CHECK(rows[2].rfind("metallic,", 0) == 0);
    CHECK(rows[2].find(",150000000,") != std::string::npos);
    CHECK(rows[3].rfind("cmos-sng-reference,,100000000,8.02e-05", 0) == 0);

    CHECK(run("fom metallic").exit_code == 0);
    CHECK(run("fom bogus").exit_code == 2);
}

TEST_CASE("sc demo") {
    const auto mul = run("sc multiply --a 0.5 --b 0.5 --n 200000 --preset molecular-dfa");
    CHECK(mul.exit_code == 0);
    CHECK(mul.out.find("nominal = 0.25") != std::string::npos);
    const auto add = run("sc add --a 0.8 --b 0.2 --select-s 0.5 --n 200000 "
                         "--preset molecular-dfa");
    CHECK(add.exit_code == 0);
    CHECK(add.out.find("nominal = 0.5") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("sample --n 8").exit_code == 1);  // no bias source: usage
    CHECK(run("sample --mean 0.5 --delta-ev 0.1").exit_code == 1);  // conflicting
    CHECK(run("sample --mean 1.0 --n 8").exit_code == 2);  // unreachable bias
    CHECK(run("nonsense").exit_code == 1);
    // Strict mode turns a timing violation into exit 3.
    const auto strict = run("sample --preset molecular-dfa --mean 0.5 --n 4 "
                            "--tb-s 1e-12 --tm-s 5e-14 --strict");
    CHECK(strict.exit_code == 3);
    // Same invocation without --strict still generates.
    const auto loose = run("sample --preset molecular-dfa --mean 0.5 --n 4 "
                           "--tb-s 1e-12 --tm-s 5e-14");
    CHECK(loose.exit_code == 0);
    CHECK(loose.out.size() == 4);
}

TEST_CASE("voltage and field bias routes") {
    // Metallic, 1 mV: delta = 1 meV = kT * ~116 -> frozen to all zeros.
    const auto v = run("sample --voltage-v 1e-3 --n 64 --seed 0");
    CHECK(v.exit_code == 0);
    CHECK(v.out == std::string(64, '0'));
    // Molecular, strong positive field: delta = -6.7 eV, biases toward 1.
    const auto f = run("sample --preset molecular-dfa --field-vpm 1e10 --n 64 --seed 0");
    CHECK(f.exit_code == 0);
    CHECK(f.out == std::string(64, '1'));
}

TEST_CASE("convergence table scales") {
    const auto r = run("convergence --mean 0.5 --preset molecular-dfa "
                       "--n-grid 100,10000 --trials 30 --seed 1");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "n,rms_error,max_error");
}
