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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "typerun/distributions.hpp"

namespace typerun {

enum class SchemeKind { proposed, huffman, symbolwise_golomb, symbolwise_elias, entropy, analytic_bound };

struct SchemeSpec {
    SchemeKind kind = SchemeKind::proposed;
    std::uint64_t golomb_m = 2;  // symbolwise_golomb only

    /// Accepts proposed, huffman, elias, golomb, golomb:M, golomb_mM, entropy
    /// (or entropy_bound) and analytic_bound. Throws ConfigError otherwise.
    static SchemeSpec parse(std::string_view text);

    /// CSV label: proposed, huffman, golomb_m<M>, elias, entropy, analytic_bound.
    [[nodiscard]] std::string name() const;

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

struct BenchmarkConfig {
    DistributionSpec distribution;
    std::vector<std::size_t> n_values;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    std::vector<SchemeSpec> schemes;
    /// Count the Huffman codebook header in total_bits. Off by default: the
    /// comparison is payload-only, side_info_bits still reports the header.
    bool huffman_side_info = false;

    /// Throws ConfigError.
    void validate() const;
};

struct BenchmarkRecord {
    std::string scheme;
    std::string dist;
    std::size_t n = 0;
    std::uint32_t alphabet_size = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double total_bits = 0;  // integral for codecs; N * rate for the reference rows
    double bits_per_symbol = 0;
    std::uint64_t side_info_bits = 0;
    double entropy = 0;
    double analytic_bound = 0;
    std::int64_t wall_time_ns = 0;
};

/// Samples each (N, trial) once with seed + trial, runs every scheme on it
/// and verifies the round trip (VerificationError on mismatch). Records are
/// ordered by (scheme, N, trial).
std::vector<BenchmarkRecord> run_benchmark(const BenchmarkConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "scheme,dist,N,L,trial,seed,total_bits,bits_per_symbol,side_info_bits,entropy,analytic_bound,"
    "wall_time_ns";

void write_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records);

struct SchemeSummary {
    std::string scheme;
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean_bits_per_symbol = 0;
    double mean_side_info_bits = 0;
};

/// Per (scheme, N) means, in first-appearance order.
std::vector<SchemeSummary> summarize(const std::vector<BenchmarkRecord>& records);

}  // namespace typerun
