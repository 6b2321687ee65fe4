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

#include "typerun/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "typerun/analysis.hpp"
#include "typerun/benchmark.hpp"
#include "typerun/errors.hpp"
#include "typerun/file_format.hpp"
#include "typerun/typerun_codec.hpp"

namespace typerun::cli {

namespace {

struct EncodeOptions {
    std::string input;
    std::string output;
    std::uint32_t alphabet_size = 0;
    std::string input_format = "text";
};

struct DecodeOptions {
    std::string input;
    std::string output;
    std::string output_format = "text";
};

struct DistributionOptions {
    std::string dist = "geometric";
    double p = 0.33;
    std::optional<std::uint32_t> alphabet_size;
    std::string pmf_path;
};

struct BenchOptions {
    DistributionOptions dist;
    std::string n_values = "1000,10000,100000";
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    std::string schemes = "proposed,huffman,golomb:2,elias,entropy,analytic_bound";
    std::string out = "-";
    bool include_side_info = false;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

DistributionSpec make_distribution(const DistributionOptions& o) {
    if (!o.pmf_path.empty()) {
        const auto bytes = read_file(o.pmf_path);
        std::istringstream in(std::string(bytes.begin(), bytes.end()));
        std::vector<double> weights;
        std::string token;
        while (in >> token) {
            try {
                std::size_t used = 0;
                weights.push_back(std::stod(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::logic_error&) {
                throw FormatError("malformed pmf value '" + token + "'");
            }
        }
        try {
            return DistributionSpec::custom(analysis::normalized(std::move(weights)));
        } catch (const DomainError& e) {
            throw FormatError(std::string("invalid pmf file: ") + e.what());
        }
    }
    if (o.dist == "geometric") return DistributionSpec::geometric(o.p, o.alphabet_size.value_or(50));
    if (o.dist == "bimodal") return DistributionSpec::bimodal(o.alphabet_size.value_or(51));
    throw ConfigError("unknown distribution '" + o.dist + "'");
}

void add_distribution_flags(CLI::App* cmd, DistributionOptions& o) {
    cmd->add_option("--dist", o.dist, "Source model: geometric or bimodal")
        ->check(CLI::IsMember({"geometric", "bimodal"}));
    cmd->add_option("--p", o.p, "Geometric success probability");
    cmd->add_option("--L", o.alphabet_size,
                    "Alphabet size (bimodal: truncation range [0, L-1]); default 50 geometric, 51 bimodal");
}

int do_encode(const EncodeOptions& o, std::ostream& out) {
    const SymbolFormat format = parse_symbol_format(o.input_format);
    SymbolSequence x{parse_symbols(read_file(o.input), format), o.alphabet_size};
    const EncodeResult encoded = encode_with_layout(x);
    write_file(o.output, wrap_container(encoded.bits));
    const double n = static_cast<double>(x.size());
    out << "N=" << x.size() << " L=" << x.alphabet_size
        << " total_bits=" << encoded.bits.bit_length()
        << " header_bits=" << encoded.layout.header_bits
        << " bits_per_symbol=" << std::setprecision(6)
        << (x.size() == 0 ? 0.0 : static_cast<double>(encoded.bits.bit_length()) / n) << '\n';
    return kSuccess;
}

int do_decode(const DecodeOptions& o, std::ostream& out) {
    const SymbolFormat format = parse_symbol_format(o.output_format);
    const BitBuffer bits = unwrap_container(read_file(o.input));
    const SymbolSequence x = decode(bits);
    write_file(o.output, format_symbols(x.symbols, format));
    out << "N=" << x.size() << " L=" << x.alphabet_size << '\n';
    return kSuccess;
}

int do_bench(const BenchOptions& o, std::ostream& out) {
    BenchmarkConfig cfg;
    cfg.distribution = make_distribution(o.dist);
    for (const auto& item : split_list(o.n_values)) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            cfg.n_values.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw ConfigError("invalid N value '" + item + "'");
        }
    }
    for (const auto& item : split_list(o.schemes)) cfg.schemes.push_back(SchemeSpec::parse(item));
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.huffman_side_info = o.include_side_info;

    const auto records = run_benchmark(cfg);
    if (o.out == "-") {
        write_csv(out, records);
        return kSuccess;
    }
    std::ofstream csv(o.out, std::ios::trunc);
    if (!csv) throw IoError("cannot create " + o.out);
    write_csv(csv, records);
    if (!csv) throw IoError("write failed: " + o.out);

    out << std::left << std::setw(16) << "scheme" << std::setw(10) << "N" << "mean_bits_per_symbol\n";
    for (const auto& s : summarize(records))
        out << std::left << std::setw(16) << s.scheme << std::setw(10) << s.n << std::fixed
            << std::setprecision(4) << s.mean_bits_per_symbol << '\n';
    return kSuccess;
}

int do_analyze(const DistributionOptions& o, std::ostream& out) {
    const DistributionSpec spec = make_distribution(o);
    const analysis::Pmf pmf = distribution_pmf(spec);
    const analysis::Pmf sorted = analysis::sorted_descending(pmf);

    // symbol for each rank, same tie rule as the codec
    std::vector<std::uint32_t> symbol_of_rank(pmf.probs.size());
    std::iota(symbol_of_rank.begin(), symbol_of_rank.end(), 0u);
    std::stable_sort(symbol_of_rank.begin(), symbol_of_rank.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return pmf.probs[a] > pmf.probs[b]; });

    out << "distribution  " << spec.label() << "  L=" << pmf.probs.size() << '\n';
    out << std::fixed << std::setprecision(6);
    out << "entropy       " << analysis::entropy(pmf) << '\n';
    out << "gap_C         " << analysis::gap_c(pmf) << '\n';
    out << "total_bound   " << analysis::total_bound(pmf) << '\n';
    out << '\n' << std::left << std::setw(6) << "rank" << std::setw(8) << "symbol" << std::setw(12)
        << "prob" << std::setw(8) << "opt_M" << "level_bound\n";
    for (std::size_t l = 0; l < sorted.probs.size(); ++l) {
        out << std::setw(6) << l << std::setw(8) << symbol_of_rank[l] << std::setw(12)
            << sorted.probs[l];
        if (l == 0) {
            out << std::setw(8) << "-" << "(implied)\n";
        } else if (sorted.probs[l] > 0.0) {
            out << std::setw(8) << analysis::optimal_golomb_param(sorted, l).value()
                << analysis::theorem1_level_bound(sorted, l) << '\n';
        } else {
            out << std::setw(8) << "-" << 0.0 << '\n';
        }
    }
    return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Type-run lossless coder for i.i.d. symbol sequences"};
    app.require_subcommand(1);

    EncodeOptions enc;
    auto* encode_cmd = app.add_subcommand("encode", "Compress a symbol file into a TRLC container");
    encode_cmd->add_option("--input", enc.input, "Symbol file")->required();
    encode_cmd->add_option("--output", enc.output, "Container file")->required();
    encode_cmd->add_option("--alphabet-size", enc.alphabet_size, "Alphabet size L")
        ->required()
        ->check(CLI::Range(1u, 0xFFFFFFFFu));
    encode_cmd->add_option("--input-format", enc.input_format, "text or u16le")
        ->check(CLI::IsMember({"text", "u16le"}));

    DecodeOptions dec;
    auto* decode_cmd = app.add_subcommand("decode", "Restore a symbol file from a TRLC container");
    decode_cmd->add_option("--input", dec.input, "Container file")->required();
    decode_cmd->add_option("--output", dec.output, "Symbol file")->required();
    decode_cmd->add_option("--output-format", dec.output_format, "text or u16le")
        ->check(CLI::IsMember({"text", "u16le"}));

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Monte Carlo bit-rate comparison, CSV output");
    add_distribution_flags(bench_cmd, bench.dist);
    bench_cmd->add_option("--n-values", bench.n_values, "Comma-separated sequence lengths");
    bench_cmd->add_option("--trials", bench.trials, "Trials per N")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Base seed; trial k uses seed + k");
    bench_cmd->add_option("--schemes", bench.schemes,
                          "Comma-separated: proposed,huffman,golomb[:M],elias,entropy,analytic_bound");
    bench_cmd->add_option("--out", bench.out, "CSV path, - for stdout");
    bench_cmd->add_flag("--include-side-info", bench.include_side_info,
                        "Count the Huffman codebook header in total_bits");

    DistributionOptions an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Entropy, gap and per-level bounds of a source");
    add_distribution_flags(analyze_cmd, an);
    analyze_cmd->add_option("--pmf", an.pmf_path, "File of whitespace-separated weights");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*encode_cmd) return do_encode(enc, out);
        if (*decode_cmd) return do_decode(dec, out);
        if (*bench_cmd) return do_bench(bench, out);
        return do_analyze(an, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFormatError;
    }
}

}  // namespace typerun::cli
