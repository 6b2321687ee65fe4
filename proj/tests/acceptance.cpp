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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "typerun/analysis.hpp"
#include "typerun/baseline_codecs.hpp"
#include "typerun/benchmark.hpp"
#include "typerun/integer_codecs.hpp"
#include "typerun/typerun_codec.hpp"

using namespace typerun;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Shared by criteria 1, 2 and 9.
struct RoundTripInstance {
    SymbolSequence x;
    EncodeResult enc;
    DecodeResult dec;
};

std::vector<RoundTripInstance> g_instances;
double g_roundtrip_seconds = 0;

void build_roundtrip_instances() {
    Rng rng(0xACCE97);
    const auto start = Clock::now();
    for (int i = 0; i < 1000; ++i) {
        auto inst = testing::random_instance(rng, 10000, 64);
        RoundTripInstance r{std::move(inst.x), {}, {}};
        r.enc = encode_with_layout(r.x);
        r.dec = decode_with_layout(r.enc.bits);
        g_instances.push_back(std::move(r));
    }
    g_roundtrip_seconds = seconds_since(start);
}

Verdict criterion_1() {
    std::size_t mismatches = 0, max_n = 0, max_l = 0, empty = 0;
    for (const auto& r : g_instances) {
        mismatches += r.dec.sequence != r.x;
        max_n = std::max(max_n, r.x.size());
        max_l = std::max<std::size_t>(max_l, r.x.alphabet_size);
        empty += r.x.size() == 0;
    }
    Verdict v;
    v.pass = mismatches == 0 && g_roundtrip_seconds < 30.0;
    v.detail = std::to_string(g_instances.size()) + " instances, " + std::to_string(mismatches) +
               " mismatches, max N=" + std::to_string(max_n) + ", max L=" + std::to_string(max_l) +
               ", N=0 cases=" + std::to_string(empty) + ", " + fmt("%.2f s (limit 30 s)", g_roundtrip_seconds);
    return v;
}

Verdict criterion_2() {
    std::size_t levels = 0, violations = 0;
    for (const auto& r : g_instances) {
        if (r.x.size() == 0) continue;
        for (const auto& lv : r.enc.layout.levels) {
            ++levels;
            const std::uint64_t m = lv.golomb_m;
            unsigned floor_log = 0;
            while ((std::uint64_t{2} << floor_log) <= m) ++floor_log;
            // bits <= (|I| - t)/M + t(floor(log2 M) + 2), multiplied through by M
            const std::uint64_t lhs = lv.payload_bits * m;
            const std::uint64_t rhs = (lv.index_set_size - lv.count) + lv.count * m * (floor_log + 2);
            violations += lhs > rhs;
        }
    }
    return {violations == 0, std::to_string(levels) + " levels checked, " + std::to_string(violations) + " violations"};
}

struct Means {
    double proposed = 0, huffman = 0, elias = 0;
};

Means benchmark_means(const DistributionSpec& dist, std::size_t n, std::size_t trials) {
    BenchmarkConfig cfg;
    cfg.distribution = dist;
    cfg.n_values = {n};
    cfg.trials = trials;
    cfg.seed = 2024;
    cfg.schemes = {SchemeSpec::parse("proposed"), SchemeSpec::parse("huffman"), SchemeSpec::parse("elias")};
    Means m;
    for (const auto& s : summarize(run_benchmark(cfg))) {
        if (s.scheme == "proposed") m.proposed = s.mean_bits_per_symbol;
        if (s.scheme == "huffman") m.huffman = s.mean_bits_per_symbol;
        if (s.scheme == "elias") m.elias = s.mean_bits_per_symbol;
    }
    return m;
}

Means g_geometric, g_bimodal;

Verdict criterion_3() {
    const auto start = Clock::now();
    const auto dist = DistributionSpec::geometric(0.33, 50);
    g_geometric = benchmark_means(dist, 100000, 50);
    const double secs = seconds_since(start);
    const auto f = distribution_pmf(dist);
    const double h = analysis::entropy(f);
    const double c = analysis::gap_c(f);
    const double limit = h + c + 1.5 * analysis::type_overhead_bound(100000, 50) + 0.05;
    Verdict v;
    v.pass = g_geometric.proposed <= limit;
    std::ostringstream os;
    os.precision(5);
    os << std::fixed << "mean proposed " << g_geometric.proposed << " b/sym <= " << limit << " (H=" << h
       << ", C=" << c << "), " << std::setprecision(1) << secs << " s";
    v.detail = os.str();
    return v;
}

Verdict criterion_4() {
    g_bimodal = benchmark_means(DistributionSpec::bimodal(), 100000, 50);
    Verdict v;
    std::ostringstream os;
    os.precision(4);
    os << std::fixed;
    for (const auto& [label, m] : {std::pair{"geometric", g_geometric}, std::pair{"bimodal", g_bimodal}}) {
        const bool below_elias = m.proposed <= m.elias;
        const bool near_huffman = std::abs(m.proposed - m.huffman) <= 0.3;
        v.pass = v.pass && below_elias && near_huffman;
        os << label << ": proposed " << m.proposed << ", elias " << m.elias << ", huffman " << m.huffman
           << " (|diff| " << std::abs(m.proposed - m.huffman) << " <= 0.3); ";
    }
    v.detail = os.str();
    return v;
}

Verdict criterion_5() {
    // (a) chosen M against the exhaustive oracle, per level
    Rng rng(0x5A5A);
    std::size_t levels = 0, over = 0;
    std::uint64_t largest_violating_count = 0;
    double worst = 0;
    std::string worst_desc, largest_desc;
    for (int i = 0; i < 100; ++i) {
        const analysis::Pmf pmf = testing::random_pmf(rng, 32);
        const SymbolSequence x = sample_pmf(pmf, 10000, rng);
        const EncodeResult enc = encode_with_layout(x);
        const TypeVector t = compute_type(x);
        const RankOrder order = rank_order(t);
        for (const auto& lv : enc.layout.levels) {
            const auto best = analysis::brute_force_best_m(x, t, order, lv.rank);
            ++levels;
            const double ratio = static_cast<double>(lv.payload_bits) / static_cast<double>(best.bits);
            if (ratio > worst) {
                worst = ratio;
                worst_desc = "t=" + std::to_string(lv.count) + " |I|=" + std::to_string(lv.index_set_size) +
                             " M=" + std::to_string(lv.golomb_m) + " best M=" + std::to_string(best.m);
            }
            if (static_cast<double>(lv.payload_bits) > 1.02 * static_cast<double>(best.bits)) {
                ++over;
                if (lv.count > largest_violating_count) {
                    largest_violating_count = lv.count;
                    largest_desc = "t=" + std::to_string(lv.count) + " |I|=" + std::to_string(lv.index_set_size) +
                                   " M=" + std::to_string(lv.golomb_m) + " bits=" + std::to_string(lv.payload_bits) +
                                   " best M=" + std::to_string(best.m) + " bits=" + std::to_string(best.bits);
                }
            }
        }
    }

    // (b) g at the rounded parameter against its integer neighbours
    Rng prng(0x6B6B);
    std::size_t pmf_levels = 0, neighbour_violations = 0, pmfs_with_violation = 0;
    std::string example;
    for (int i = 0; i < 1000; ++i) {
        const analysis::Pmf s = analysis::sorted_descending(testing::random_pmf(prng, 32));
        bool any = false;
        for (std::size_t l = 1; l < s.probs.size(); ++l) {
            if (s.probs[l] <= 0) continue;
            ++pmf_levels;
            const std::uint64_t m = analysis::optimal_golomb_param(s, l).value();
            const double g = analysis::golomb_cost_g(s, l, m);
            bool bad = g > analysis::golomb_cost_g(s, l, m + 1) + 1e-12;
            if (m > 1) bad = bad || g > analysis::golomb_cost_g(s, l, m - 1) + 1e-12;
            if (bad) {
                ++neighbour_violations;
                any = true;
                if (example.empty()) {
                    std::ostringstream os;
                    os.precision(4);
                    const double rest = analysis::golomb_cost_g(s, l, 1) - s.probs[l] * 2.0;
                    os << "e.g. f_l=" << s.probs[l] << " ln2*A/f_l=" << std::log(2.0) * rest / s.probs[l]
                       << " -> M=" << m << " but g(" << m << ")=" << g << " > g(" << m + 1
                       << ")=" << analysis::golomb_cost_g(s, l, m + 1);
                    example = os.str();
                }
            }
        }
        pmfs_with_violation += any;
    }

    Verdict v;
    v.pass = over == 0 && neighbour_violations == 0;
    std::ostringstream os;
    os.precision(4);
    os << "(a) " << (over == 0 ? "PASS" : "FAIL") << ": " << levels << " levels, " << over
       << " above 1.02x oracle (all with t <= " << largest_violating_count << "), worst ratio " << worst
       << " [" << worst_desc << "], largest-count violation [" << largest_desc << "]; (b) "
       << (neighbour_violations == 0 ? "PASS" : "FAIL") << ": " << neighbour_violations << " of " << pmf_levels
       << " levels in " << pmfs_with_violation << " of 1000 pmfs have a cheaper neighbour";
    if (!example.empty()) os << "; " << example;
    v.detail = os.str();
    return v;
}

Verdict criterion_6() {
    Rng rng(0x66);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const analysis::Pmf f = testing::random_pmf(rng, 64);
        worst = std::max(worst, std::abs(analysis::total_bound(f) - analysis::summed_level_bounds(f)));
    }
    return {worst <= 1e-9, "1000 pmfs, max |H+C - sum of level bounds| = " + fmt("%.3g", worst) + " (tol 1e-9)"};
}

Verdict criterion_7() {
    Rng rng(0x77);
    std::size_t checked = 0, violations = 0;
    while (checked < 200) {
        const std::size_t L = 2 + rng.below(63);
        TypeVector t{std::vector<std::uint64_t>(L)};
        for (auto& c : t.counts) c = rng.below(3) == 0 ? 0 : rng.below(rng.below(2) ? 20 : 5000);
        if (std::count_if(t.counts.begin(), t.counts.end(), [](auto c) { return c > 0; }) < 2) continue;
        ++checked;
        // a sequence realizing the type, in shuffled order
        SymbolSequence x{{}, static_cast<std::uint32_t>(L)};
        for (std::uint32_t s = 0; s < L; ++s) x.symbols.insert(x.symbols.end(), t.counts[s], s);
        for (std::size_t i = x.symbols.size(); i > 1; --i) std::swap(x.symbols[i - 1], x.symbols[rng.below(i)]);

        const auto book = huffman_build(t);
        const auto r = huffman_encode(x, book);
        const double n = static_cast<double>(t.total());
        const double h = analysis::entropy(analysis::empirical_pmf(t));
        const double bits = static_cast<double>(r.payload_bits());
        violations += !(bits >= n * h - 1e-6 && bits <= n * (h + 1) + 1e-6);
    }
    return {violations == 0, "200 type vectors, " + std::to_string(violations) + " outside [N*H, N*(H+1)]"};
}

Verdict criterion_8() {
    struct Vector {
        std::string name;
        std::function<void(BitBuffer&)> emit;
        std::string expected;
    };
    const std::vector<Vector> vectors{
        {"unary(3)", [](BitBuffer& b) { encode_unary(b, 3); }, "1110"},
        {"tb(0,M=3)", [](BitBuffer& b) { encode_truncated_binary(b, 0, GolombParam(3)); }, "0"},
        {"tb(1,M=3)", [](BitBuffer& b) { encode_truncated_binary(b, 1, GolombParam(3)); }, "10"},
        {"tb(2,M=3)", [](BitBuffer& b) { encode_truncated_binary(b, 2, GolombParam(3)); }, "11"},
        {"golomb(7,M=3)", [](BitBuffer& b) { encode_golomb(b, 7, GolombParam(3)); }, "11010"},
        {"omega(1)", [](BitBuffer& b) { encode_elias_omega(b, 1); }, "0"},
        {"omega(2)", [](BitBuffer& b) { encode_elias_omega(b, 2); }, "100"},
        {"omega(4)", [](BitBuffer& b) { encode_elias_omega(b, 4); }, "101000"},
    };
    std::string failed;
    for (const auto& v : vectors) {
        BitBuffer b;
        v.emit(b);
        if (b.to_bit_string() != v.expected) failed += " " + v.name + "=" + b.to_bit_string();
    }
    return {failed.empty(), std::to_string(vectors.size()) + " vectors" + (failed.empty() ? ", all exact" : ", mismatched:" + failed)};
}

Verdict criterion_9() {
    std::size_t levels = 0, disagreements = 0;
    for (const auto& r : g_instances) {
        if (r.enc.layout.levels.size() != r.dec.layout.levels.size()) {
            ++disagreements;
            continue;
        }
        for (std::size_t i = 0; i < r.enc.layout.levels.size(); ++i) {
            ++levels;
            disagreements += r.enc.layout.levels[i].golomb_m != r.dec.layout.levels[i].golomb_m;
        }
    }
    return {disagreements == 0, std::to_string(levels) + " levels, " + std::to_string(disagreements) + " M mismatches"};
}

Verdict criterion_10() {
    Rng rng(0x10);
    analysis::Pmf uniform{std::vector<double>(256, 1.0 / 256)};
    const SymbolSequence x = sample_pmf(uniform, 1000000, rng);
    const auto start = Clock::now();
    const BitBuffer bits = encode(x);
    const double enc_s = seconds_since(start);
    const auto mid = Clock::now();
    const SymbolSequence back = decode(bits);
    const double dec_s = seconds_since(mid);
    const double total = enc_s + dec_s;
    Verdict v;
    v.pass = back == x && total < 5.0;
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << "N=1e6 L=256 uniform: encode " << enc_s << " s (" << 1.0 / enc_s << " Msym/s), decode "
       << dec_s << " s (" << 1.0 / dec_s << " Msym/s), total " << total << " s (limit 5 s), "
       << static_cast<double>(bits.bit_length()) / 1e6 << " b/sym, kernels=" << kernels::active_kernels().name;
    v.detail = os.str();
    return v;
}

}  // namespace

int main() {
    build_roundtrip_instances();

    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"1  lossless round trip", criterion_1},
        {"2  per-level finite-N bound", criterion_2},
        {"3  near-entropy, geometric", criterion_3},
        {"4  baseline ordering", criterion_4},
        {"5  parameter choice", criterion_5},
        {"6  analytic identity", criterion_6},
        {"7  Huffman band", criterion_7},
        {"8  primitive vectors", criterion_8},
        {"9  decoder M agreement", criterion_9},
        {"10 performance smoke", criterion_10},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("[%s] %-30s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
