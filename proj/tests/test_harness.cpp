// Copyright 2026 The typerun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sys/wait.h>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "typerun/analysis.hpp"
#include "typerun/benchmark.hpp"
#include "typerun/cli.hpp"
#include "typerun/distributions.hpp"
#include "typerun/errors.hpp"
#include "typerun/file_format.hpp"

using namespace typerun;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("typerun_test_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

struct CliOutcome {
    int code;
    std::string out;
    std::string err;
};

CliOutcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "typerun");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("geometric pmf is truncated and renormalized") {
    const auto f = distribution_pmf(DistributionSpec::geometric(0.5, 3));
    REQUIRE(f.probs.size() == 3);
    // 0.5, 0.25, 0.125 renormalized by 0.875
    CHECK(f.probs[0] == doctest::Approx(0.5 / 0.875));
    CHECK(f.probs[2] == doctest::Approx(0.125 / 0.875));
    CHECK(distribution_pmf(DistributionSpec::geometric(1.0, 4)).probs == std::vector<double>{1, 0, 0, 0});
    CHECK_THROWS_AS(distribution_pmf(DistributionSpec::geometric(0.0, 4)), ConfigError);
    CHECK_THROWS_AS(distribution_pmf(DistributionSpec::geometric(1.5, 4)), ConfigError);
    CHECK_THROWS_AS(distribution_pmf(DistributionSpec::geometric(0.3, 0)), ConfigError);
}

TEST_CASE("bimodal pmf: equal mixture of binomial(50, 0.33) and its +20 shift on [0, 50]") {
    const auto f = distribution_pmf(DistributionSpec::bimodal());
    REQUIRE(f.probs.size() == 51);
    CHECK(std::accumulate(f.probs.begin(), f.probs.end(), 0.0) == doctest::Approx(1.0));

    // independent evaluation of the binomial by the multiplicative recurrence
    std::vector<double> binom(51);
    binom[0] = std::pow(0.67, 50);
    for (int k = 1; k <= 50; ++k) binom[k] = binom[k - 1] * (50 - k + 1) / k * (0.33 / 0.67);
    std::vector<double> mix(51);
    double total = 0.0;
    for (int k = 0; k <= 50; ++k) {
        mix[k] = 0.5 * binom[k] + (k >= 20 ? 0.5 * binom[k - 20] : 0.0);
        total += mix[k];
    }
    for (int k = 0; k <= 50; ++k) CHECK(f.probs[k] == doctest::Approx(mix[k] / total).epsilon(1e-9));

    // two modes near 16 and 36
    const auto argmax_in = [&](int lo, int hi) {
        return std::max_element(f.probs.begin() + lo, f.probs.begin() + hi) - f.probs.begin();
    };
    CHECK(argmax_in(0, 26) == 16);
    CHECK(argmax_in(26, 51) == 36);
}

TEST_CASE("Rng is the standard 64-bit Mersenne Twister") {
    Rng rng(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = rng.next_u64();
    CHECK(v == 9981545732273789042ull);
    Rng a(1), b(1);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(b.uniform01() == u);
    }
    CHECK_THROWS_AS(a.below(0), RangeError);
}

TEST_CASE("sample: law of large numbers, degenerate p, determinism") {
    const auto spec = DistributionSpec::geometric(0.33, 50);
    const auto x = sample(spec, 100000, 3);
    const auto t = compute_type(x);
    const auto f = distribution_pmf(spec);
    for (std::size_t l = 0; l < 50; ++l)
        CHECK(std::abs(static_cast<double>(t.counts[l]) / 1e5 - f.probs[l]) <= 0.02);

    const auto zeros = sample(DistributionSpec::geometric(1.0, 50), 1000, 9);
    CHECK(std::all_of(zeros.symbols.begin(), zeros.symbols.end(), [](auto s) { return s == 0; }));

    CHECK(sample(spec, 5000, 77) == sample(spec, 5000, 77));
    CHECK(sample(spec, 5000, 77) != sample(spec, 5000, 78));

    // zero-probability symbols are never drawn
    const auto sparse = sample(DistributionSpec::custom(analysis::Pmf{{0.5, 0.0, 0.5, 0.0}}), 20000, 1);
    const auto ts = compute_type(sparse);
    CHECK(ts.counts[1] == 0);
    CHECK(ts.counts[3] == 0);
}

TEST_CASE("scheme names parse and print") {
    CHECK(SchemeSpec::parse("golomb:3") == SchemeSpec{SchemeKind::symbolwise_golomb, 3});
    CHECK(SchemeSpec::parse("golomb_m3").name() == "golomb_m3");
    CHECK(SchemeSpec::parse("golomb").golomb_m == 2);
    CHECK(SchemeSpec::parse("entropy_bound").name() == "entropy");
    CHECK_THROWS_AS(SchemeSpec::parse("golomb:0"), ConfigError);
    CHECK_THROWS_AS(SchemeSpec::parse("arith"), ConfigError);
}

TEST_CASE("run_benchmark: cardinality, ordering, reference rows") {
    BenchmarkConfig cfg;
    cfg.distribution = DistributionSpec::geometric(0.33, 50);
    cfg.n_values = {10, 500};
    cfg.trials = 3;
    cfg.seed = 100;
    for (const auto* s : {"proposed", "huffman", "golomb:2", "elias", "entropy", "analytic_bound"})
        cfg.schemes.push_back(SchemeSpec::parse(s));
    const auto records = run_benchmark(cfg);
    REQUIRE(records.size() == 2 * 3 * 6);

    std::size_t i = 0;
    for (const auto& scheme : cfg.schemes)
        for (const std::size_t n : cfg.n_values)
            for (std::size_t trial = 0; trial < 3; ++trial, ++i) {
                const auto& r = records[i];
                REQUIRE(r.scheme == scheme.name());
                REQUIRE(r.n == n);
                REQUIRE(r.trial == trial);
                REQUIRE(r.seed == 100 + trial);
                REQUIRE(std::isfinite(r.bits_per_symbol));
                REQUIRE(r.bits_per_symbol == doctest::Approx(r.total_bits / static_cast<double>(n)));
            }

    const auto f = distribution_pmf(cfg.distribution);
    for (const auto& r : records) {
        CHECK(r.entropy == doctest::Approx(analysis::entropy(f)));
        CHECK(r.analytic_bound == doctest::Approx(analysis::total_bound(f)));
        if (r.scheme == "entropy") CHECK(r.bits_per_symbol == doctest::Approx(r.entropy));
        if (r.scheme == "proposed") CHECK(r.side_info_bits > 0);
    }

    // same config, same bits
    const auto again = run_benchmark(cfg);
    for (std::size_t k = 0; k < records.size(); ++k) REQUIRE(again[k].total_bits == records[k].total_bits);

    std::ostringstream csv;
    write_csv(csv, records);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == kCsvHeader);
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 11);
    }
    CHECK(rows == records.size());
}

TEST_CASE("Huffman side information is optional in totals") {
    BenchmarkConfig cfg;
    cfg.distribution = DistributionSpec::bimodal();
    cfg.n_values = {2000};
    cfg.trials = 1;
    cfg.schemes = {SchemeSpec::parse("huffman")};
    const auto payload_only = run_benchmark(cfg);
    cfg.huffman_side_info = true;
    const auto with_header = run_benchmark(cfg);
    CHECK(with_header[0].total_bits == payload_only[0].total_bits + payload_only[0].side_info_bits);
}

TEST_CASE("benchmark config validation") {
    BenchmarkConfig cfg;
    cfg.n_values = {10};
    cfg.schemes = {SchemeSpec::parse("proposed")};
    cfg.trials = 0;
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
    cfg.trials = 1;
    cfg.n_values.clear();
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
}

TEST_CASE("container wrapper") {
    BitBuffer b;
    b.write_uint(0b101, 3);
    const auto file = wrap_container(b);
    CHECK(file == std::vector<std::uint8_t>{'T', 'R', 'L', 'C', 0x01, 0xA0});
    CHECK(unwrap_container(file).bytes()[0] == 0xA0);

    auto bad = file;
    bad[0] = 'X';
    CHECK_THROWS_AS(unwrap_container(bad), FormatError);
    bad = file;
    bad[4] = 0x02;
    CHECK_THROWS_AS(unwrap_container(bad), FormatError);
    CHECK_THROWS_AS(unwrap_container(std::vector<std::uint8_t>{'T', 'R'}), FormatError);
}

TEST_CASE("symbol file formats") {
    const std::string text = " 1 2\n3\t65535  \n";
    CHECK(parse_symbols(std::vector<std::uint8_t>(text.begin(), text.end()), SymbolFormat::text) ==
          std::vector<std::uint32_t>{1, 2, 3, 65535});
    const std::string junk = "1 x 2";
    CHECK_THROWS_AS(parse_symbols(std::vector<std::uint8_t>(junk.begin(), junk.end()), SymbolFormat::text),
                    FormatError);
    const std::string neg = "-1";
    CHECK_THROWS_AS(parse_symbols(std::vector<std::uint8_t>(neg.begin(), neg.end()), SymbolFormat::text),
                    FormatError);

    const std::vector<std::uint32_t> symbols{0, 1, 0xABCD, 65535};
    const auto bytes = format_symbols(symbols, SymbolFormat::u16le);
    CHECK(bytes == std::vector<std::uint8_t>{0, 0, 1, 0, 0xCD, 0xAB, 0xFF, 0xFF});
    CHECK(parse_symbols(bytes, SymbolFormat::u16le) == symbols);
    CHECK_THROWS_AS(parse_symbols(std::vector<std::uint8_t>{1, 2, 3}, SymbolFormat::u16le), FormatError);
    CHECK_THROWS_AS(format_symbols(std::vector<std::uint32_t>{65536}, SymbolFormat::u16le), RangeError);
    CHECK_THROWS_AS(parse_symbol_format("csv"), ConfigError);
}

TEST_CASE("CLI encode/decode round trip, text") {
    TempDir dir;
    const auto x = sample(DistributionSpec::geometric(0.33, 50), 1000, 4);
    const auto text = format_symbols(x.symbols, SymbolFormat::text);
    write_file(dir / "in.txt", text);

    const auto enc = run_cli({"encode", "--input", (dir / "in.txt").string(), "--output",
                              (dir / "c.trlc").string(), "--alphabet-size", "50"});
    REQUIRE(enc.code == cli::kSuccess);
    CHECK(enc.out.find("N=1000 L=50") != std::string::npos);
    CHECK(slurp(dir / "c.trlc").substr(0, 5) == std::string("TRLC\x01"));

    const auto dec = run_cli({"decode", "--input", (dir / "c.trlc").string(), "--output",
                              (dir / "out.txt").string()});
    REQUIRE(dec.code == cli::kSuccess);
    CHECK(slurp(dir / "out.txt") == std::string(text.begin(), text.end()));
}

TEST_CASE("CLI encode/decode round trip, u16le with the full 16-bit range") {
    TempDir dir;
    Rng rng(16);
    std::vector<std::uint32_t> symbols{0, 65535};
    for (int i = 0; i < 3000; ++i) symbols.push_back(static_cast<std::uint32_t>(rng.below(65536)));
    const auto bytes = format_symbols(symbols, SymbolFormat::u16le);
    write_file(dir / "in.bin", bytes);

    REQUIRE(run_cli({"encode", "--input", (dir / "in.bin").string(), "--output", (dir / "c.trlc").string(),
                     "--alphabet-size", "65536", "--input-format", "u16le"})
                .code == cli::kSuccess);
    REQUIRE(run_cli({"decode", "--input", (dir / "c.trlc").string(), "--output", (dir / "out.bin").string(),
                     "--output-format", "u16le"})
                .code == cli::kSuccess);
    CHECK(slurp(dir / "out.bin") == std::string(bytes.begin(), bytes.end()));
}

TEST_CASE("CLI exit codes") {
    TempDir dir;
    write_file(dir / "bad.trlc", std::vector<std::uint8_t>{'N', 'O', 'P', 'E', 1, 0});
    CHECK(run_cli({"decode", "--input", (dir / "bad.trlc").string(), "--output", (dir / "o").string()}).code ==
          cli::kFormatError);

    CHECK(run_cli({}).code == cli::kUsageError);
    CHECK(run_cli({"encode", "--input", "x"}).code == cli::kUsageError);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
    CHECK(run_cli({"encode", "--input", (dir / "missing.txt").string(), "--output", (dir / "o").string(),
                   "--alphabet-size", "4"})
              .code == cli::kIoError);

    write_file(dir / "big.txt", std::vector<std::uint8_t>{'7', '\n'});
    CHECK(run_cli({"encode", "--input", (dir / "big.txt").string(), "--output", (dir / "o").string(),
                   "--alphabet-size", "4"})
              .code == cli::kFormatError);

    // truncated container
    write_file(dir / "in.txt", std::vector<std::uint8_t>{'1', ' ', '0', ' ', '1', ' ', '2'});
    REQUIRE(run_cli({"encode", "--input", (dir / "in.txt").string(), "--output", (dir / "c").string(),
                     "--alphabet-size", "3"})
                .code == cli::kSuccess);
    auto container = read_file(dir / "c");
    container.pop_back();
    write_file(dir / "cut", container);
    CHECK(run_cli({"decode", "--input", (dir / "cut").string(), "--output", (dir / "o").string()}).code ==
          cli::kFormatError);

    CHECK(run_cli({"bench", "--schemes", "arith", "--n-values", "10", "--trials", "1"}).code ==
          cli::kUsageError);
    CHECK(run_cli({"--help"}).code == cli::kSuccess);
}

TEST_CASE("CLI bench writes the CSV schema") {
    TempDir dir;
    const auto r = run_cli({"bench", "--dist", "bimodal", "--n-values", "100,200", "--trials", "2", "--seed",
                            "5", "--schemes", "proposed,huffman,entropy", "--out", (dir / "b.csv").string()});
    REQUIRE(r.code == cli::kSuccess);
    CHECK(r.out.find("mean_bits_per_symbol") != std::string::npos);
    std::istringstream csv(slurp(dir / "b.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == kCsvHeader);
    std::size_t rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 2 * 2 * 3);

    const auto to_stdout = run_cli({"bench", "--n-values", "50", "--trials", "1", "--schemes", "proposed"});
    CHECK(to_stdout.out.rfind(std::string(kCsvHeader), 0) == 0);
}

TEST_CASE("CLI analyze prints bounds") {
    const auto r = run_cli({"analyze", "--dist", "geometric", "--p", "0.33", "--L", "50"});
    REQUIRE(r.code == cli::kSuccess);
    const auto f = distribution_pmf(DistributionSpec::geometric(0.33, 50));
    std::ostringstream h;
    h << std::fixed << std::setprecision(6) << analysis::entropy(f);
    CHECK(r.out.find("entropy       " + h.str()) != std::string::npos);
    CHECK(r.out.find("total_bound") != std::string::npos);
    CHECK(r.out.find("opt_M") != std::string::npos);

    TempDir dir;
    const std::string weights = "1 2 3 4\n";
    write_file(dir / "pmf.txt", std::vector<std::uint8_t>(weights.begin(), weights.end()));
    const auto custom = run_cli({"analyze", "--pmf", (dir / "pmf.txt").string()});
    REQUIRE(custom.code == cli::kSuccess);
    CHECK(custom.out.find("L=4") != std::string::npos);

    const std::string bad = "1 -2\n";
    write_file(dir / "bad.txt", std::vector<std::uint8_t>(bad.begin(), bad.end()));
    CHECK(run_cli({"analyze", "--pmf", (dir / "bad.txt").string()}).code == cli::kFormatError);
}

TEST_CASE("CLI binary returns the documented exit codes") {
    TempDir dir;
    write_file(dir / "bad.trlc", std::vector<std::uint8_t>{'N', 'O', 'P', 'E', 1});
    const std::string cmd = std::string(TYPERUN_CLI_PATH) + " decode --input " + (dir / "bad.trlc").string() +
                            " --output " + (dir / "o").string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 3);
}
