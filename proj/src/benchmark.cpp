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

#include "typerun/benchmark.hpp"

#include <charconv>
#include <chrono>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>

#include "typerun/baseline_codecs.hpp"
#include "typerun/errors.hpp"

namespace typerun {

namespace {

std::uint64_t parse_golomb_m(std::string_view digits) {
    std::uint64_t m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || m == 0)
        throw ConfigError("invalid Golomb parameter '" + std::string(digits) + "'");
    return m;
}

std::unique_ptr<SequenceCodec> make_codec(const SchemeSpec& s) {
    switch (s.kind) {
        case SchemeKind::proposed: return make_typerun_codec();
        case SchemeKind::huffman: return make_huffman_codec();
        case SchemeKind::symbolwise_golomb: return make_symbolwise_golomb_codec(GolombParam(s.golomb_m));
        case SchemeKind::symbolwise_elias: return make_symbolwise_elias_codec();
        default: return nullptr;
    }
}

}  // namespace

SchemeSpec SchemeSpec::parse(std::string_view text) {
    if (text == "proposed") return {SchemeKind::proposed};
    if (text == "huffman") return {SchemeKind::huffman};
    if (text == "elias") return {SchemeKind::symbolwise_elias};
    if (text == "entropy" || text == "entropy_bound") return {SchemeKind::entropy};
    if (text == "analytic_bound") return {SchemeKind::analytic_bound};
    if (text == "golomb") return {SchemeKind::symbolwise_golomb, 2};
    if (text.starts_with("golomb:")) return {SchemeKind::symbolwise_golomb, parse_golomb_m(text.substr(7))};
    if (text.starts_with("golomb_m")) return {SchemeKind::symbolwise_golomb, parse_golomb_m(text.substr(8))};
    throw ConfigError("unknown scheme '" + std::string(text) + "'");
}

std::string SchemeSpec::name() const {
    switch (kind) {
        case SchemeKind::proposed: return "proposed";
        case SchemeKind::huffman: return "huffman";
        case SchemeKind::symbolwise_golomb: return "golomb_m" + std::to_string(golomb_m);
        case SchemeKind::symbolwise_elias: return "elias";
        case SchemeKind::entropy: return "entropy";
        case SchemeKind::analytic_bound: return "analytic_bound";
    }
    return "unknown";
}

void BenchmarkConfig::validate() const {
    if (trials == 0) throw ConfigError("trials must be >= 1");
    if (n_values.empty()) throw ConfigError("at least one N value is required");
    if (schemes.empty()) throw ConfigError("at least one scheme is required");
    for (const auto& s : schemes)
        if (s.kind == SchemeKind::symbolwise_golomb && s.golomb_m == 0)
            throw ConfigError("Golomb parameter must be >= 1");
    (void)distribution_pmf(distribution);
}

std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig& cfg) {
    cfg.validate();
    const analysis::Pmf pmf = distribution_pmf(cfg.distribution);
    const double source_entropy = analysis::entropy(pmf);
    const double bound = analysis::total_bound(pmf);
    const std::uint32_t L = cfg.distribution.alphabet_size;
    const std::string label = cfg.distribution.label();

    std::vector<std::unique_ptr<SequenceCodec>> codecs;
    for (const auto& s : cfg.schemes) codecs.push_back(make_codec(s));

    const std::size_t per_scheme = cfg.n_values.size() * cfg.trials;
    std::vector<BenchmarkRecord> records(cfg.schemes.size() * per_scheme);

    for (std::size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
        const std::size_t n = cfg.n_values[ni];
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = cfg.seed + trial;
            const SymbolSequence x = sample(cfg.distribution, n, seed);
            for (std::size_t si = 0; si < cfg.schemes.size(); ++si) {
                BenchmarkRecord& rec = records[si * per_scheme + ni * cfg.trials + trial];
                rec.scheme = cfg.schemes[si].name();
                rec.dist = label;
                rec.n = n;
                rec.alphabet_size = L;
                rec.trial = trial;
                rec.seed = seed;
                rec.entropy = source_entropy;
                rec.analytic_bound = bound;

                SequenceCodec* codec = codecs[si].get();
                if (codec == nullptr) {
                    const double rate =
                        cfg.schemes[si].kind == SchemeKind::entropy ? source_entropy : bound;
                    rec.bits_per_symbol = rate;
                    rec.total_bits = rate * static_cast<double>(n);
                    continue;
                }

                const auto start = std::chrono::steady_clock::now();
                const SequenceCodecResult encoded = codec->encode(x);
                const SymbolSequence decoded = codec->decode(encoded.bits, n, L);
                const auto stop = std::chrono::steady_clock::now();
                if (decoded.symbols != x.symbols)
                    throw VerificationError(rec.scheme + " failed to round-trip N=" +
                                            std::to_string(n) + " seed=" + std::to_string(seed));

                std::uint64_t counted = encoded.total_bits;
                if (cfg.schemes[si].kind == SchemeKind::huffman && !cfg.huffman_side_info)
                    counted = encoded.payload_bits();
                rec.total_bits = static_cast<double>(counted);
                rec.bits_per_symbol = n == 0 ? 0.0 : rec.total_bits / static_cast<double>(n);
                rec.side_info_bits = encoded.side_info_bits;
                rec.wall_time_ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
            }
        }
    }
    return records;
}

void write_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records) {
    os << kCsvHeader << '\n';
    const auto old_precision = os.precision(17);
    for (const auto& r : records) {
        os << r.scheme << ',' << r.dist << ',' << r.n << ',' << r.alphabet_size << ',' << r.trial
           << ',' << r.seed << ',' << r.total_bits << ',' << r.bits_per_symbol << ','
           << r.side_info_bits << ',' << r.entropy << ',' << r.analytic_bound << ','
           << r.wall_time_ns << '\n';
    }
    os.precision(old_precision);
}

std::vector<SchemeSummary> summarize(const std::vector<BenchmarkRecord>& records) {
    std::vector<SchemeSummary> out;
    std::map<std::pair<std::string, std::size_t>, std::size_t> slot;
    for (const auto& r : records) {
        const auto key = std::make_pair(r.scheme, r.n);
        auto it = slot.find(key);
        if (it == slot.end()) {
            it = slot.emplace(key, out.size()).first;
            out.push_back(SchemeSummary{r.scheme, r.n, 0, 0.0, 0.0});
        }
        SchemeSummary& s = out[it->second];
        ++s.trials;
        s.mean_bits_per_symbol += r.bits_per_symbol;
        s.mean_side_info_bits += static_cast<double>(r.side_info_bits);
    }
    for (auto& s : out) {
        s.mean_bits_per_symbol /= static_cast<double>(s.trials);
        s.mean_side_info_bits /= static_cast<double>(s.trials);
    }
    return out;
}

}  // namespace typerun
