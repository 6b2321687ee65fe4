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

// Type-vector + shrinking-support run-length coding.
//
// A sequence over {0..L-1} is described by its symbol counts and, for every
// symbol except the most frequent one, the positions it occupies. Symbols are
// visited in descending-count order; each visited symbol's positions are
// expressed as zero-runs over the positions not yet claimed by earlier
// symbols, and those runs are Golomb coded with a parameter derived from the
// counts alone. The most frequent symbol fills whatever is left.
//
// Container layout (MSB-first, no magic):
//   omega(L)
//   omega(t_0 + 1) ... omega(t_{L-1} + 1)        natural symbol order
//   for rank j = 1..L-1 with t_{sigma[j]} > 0:
//     t_{sigma[j]} Golomb codewords, parameter M_j
//   zero padding to a byte boundary

#include <cstddef>
#include <cstdint>
#include <vector>

#include "typerun/bitio.hpp"
#include "typerun/integer_codecs.hpp"
#include "typerun/kernels.hpp"

namespace typerun {

/// Symbols in [0, alphabet_size). Sequences longer than 2^32 - 1 are rejected
/// by the codec.
struct SymbolSequence {
    std::vector<std::uint32_t> symbols;
    std::uint32_t alphabet_size = 1;

    /// Throws RangeError if alphabet_size is 0 or any symbol is out of range.
    void validate() const;

    [[nodiscard]] std::size_t size() const noexcept { return symbols.size(); }

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

/// Occurrence count per symbol, natural symbol order.
struct TypeVector {
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const noexcept;
    [[nodiscard]] std::size_t alphabet_size() const noexcept { return counts.size(); }

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

/// Symbols sorted by descending count, ties by ascending symbol index.
struct RankOrder {
    std::vector<std::uint32_t> sigma;

    friend bool operator==(const RankOrder&, const RankOrder&) = default;
};

/// runs[j] holds the encoded zero-runs of rank j (runs[0] is always empty,
/// the rank-0 symbol is implied). |runs[j]| == t[sigma[j]].
struct EncodedRunLists {
    std::vector<std::vector<std::uint64_t>> runs;
};

/// Per-level bookkeeping, reported by both encoder and decoder.
struct LevelInfo {
    std::uint32_t rank = 0;
    std::uint32_t symbol = 0;
    std::uint64_t count = 0;
    std::uint64_t index_set_size = 0;  // |I_j|
    std::uint64_t golomb_m = 1;
    std::uint64_t payload_bits = 0;

    friend bool operator==(const LevelInfo&, const LevelInfo&) = default;
};

struct ContainerLayout {
    std::uint64_t header_bits = 0;       // omega(L) plus the type codes
    std::uint64_t type_code_bits = 0;    // type codes only
    std::uint64_t payload_bits = 0;
    std::vector<LevelInfo> levels;       // only levels with a nonzero count
};

struct EncodeResult {
    BitBuffer bits;
    ContainerLayout layout;
};

struct DecodeResult {
    SymbolSequence sequence;
    ContainerLayout layout;
};

TypeVector compute_type(const SymbolSequence& x);

RankOrder rank_order(const TypeVector& t);

/// M_j = max(1, round_half_up(ln2 * (N - sum_{i=1..j} t[sigma[i]]) / t[sigma[j]])).
/// Throws DomainError when level is outside [1, L-1] or its count is zero.
GolombParam choose_golomb_param(const TypeVector& t, const RankOrder& sigma, std::size_t level);

EncodedRunLists extract_runs(const SymbolSequence& x, const TypeVector& t, const RankOrder& sigma);
EncodedRunLists extract_runs(const SymbolSequence& x, const TypeVector& t, const RankOrder& sigma,
                             const kernels::KernelTable& kernels);

BitBuffer encode(const SymbolSequence& x);
EncodeResult encode_with_layout(const SymbolSequence& x);
EncodeResult encode_with_layout(const SymbolSequence& x, const kernels::KernelTable& kernels);

/// Throws TruncationError, CorruptDataError or FormatError on bad input.
SymbolSequence decode(const BitBuffer& bits);
DecodeResult decode_with_layout(const BitBuffer& bits);
DecodeResult decode_with_layout(const BitBuffer& bits, const kernels::KernelTable& kernels);

}  // namespace typerun
