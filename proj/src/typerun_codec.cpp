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

#include "typerun/typerun_codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <string>

#include "typerun/errors.hpp"

namespace typerun {

namespace {

constexpr std::uint64_t kMaxSequenceLength = std::numeric_limits<std::uint32_t>::max();

// Walks the levels in rank order over a compacted copy of the symbols and
// hands each nonempty level's encoded runs to fn(rank, index_set_size, runs).
template <typename Fn>
void scan_levels(const SymbolSequence& x, const TypeVector& t, const RankOrder& order,
                 const kernels::KernelTable& kernels, Fn&& fn) {
    const std::size_t L = t.alphabet_size();
    std::vector<std::uint32_t> remaining(x.symbols);
    std::vector<std::uint64_t> mask(kernels::mask_words(remaining.size()));
    std::vector<std::uint64_t> runs;
    for (std::size_t j = 1; j < L; ++j) {
        const std::uint32_t symbol = order.sigma[j];
        const std::uint64_t count = t.counts[symbol];
        if (count == 0) break;  // descending order: every later level is empty too
        const std::span<const std::uint32_t> current(remaining);
        const std::size_t matches = kernels.match_mask(current, symbol, mask);
        if (matches != count) throw Error("type vector does not match the sequence");

        runs.clear();
        std::size_t next = 0;
        for (std::size_t w = 0; w < kernels::mask_words(current.size()); ++w) {
            std::uint64_t word = mask[w];
            while (word != 0) {
                const std::size_t pos = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                runs.push_back(pos - next);
                next = pos + 1;
                word &= word - 1;
            }
        }
        fn(j, current.size(), std::span<const std::uint64_t>(runs));

        const bool more = j + 1 < L && t.counts[order.sigma[j + 1]] > 0;
        if (more) {
            const std::size_t kept = kernels.compact_unmatched(current, mask, remaining.data());
            remaining.resize(kept);
        }
    }
}

void check_codec_limits(const SymbolSequence& x) {
    x.validate();
    if (x.size() > kMaxSequenceLength)
        throw RangeError("sequence longer than " + std::to_string(kMaxSequenceLength));
}

}  // namespace

void SymbolSequence::validate() const {
    if (alphabet_size == 0) throw RangeError("alphabet size must be >= 1");
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] >= alphabet_size)
            throw RangeError("symbol " + std::to_string(symbols[i]) + " at position " +
                             std::to_string(i) + " outside alphabet of size " +
                             std::to_string(alphabet_size));
}

std::uint64_t TypeVector::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

TypeVector compute_type(const SymbolSequence& x) {
    x.validate();
    TypeVector t{std::vector<std::uint64_t>(x.alphabet_size, 0)};
    for (const std::uint32_t s : x.symbols) ++t.counts[s];
    return t;
}

RankOrder rank_order(const TypeVector& t) {
    RankOrder order{std::vector<std::uint32_t>(t.alphabet_size())};
    std::iota(order.sigma.begin(), order.sigma.end(), 0u);
    std::stable_sort(order.sigma.begin(), order.sigma.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return t.counts[a] > t.counts[b]; });
    return order;
}

GolombParam choose_golomb_param(const TypeVector& t, const RankOrder& order, std::size_t level) {
    const std::size_t L = t.alphabet_size();
    if (level == 0 || level >= L)
        throw DomainError("level " + std::to_string(level) + " outside [1, L-1]");
    const std::uint64_t count = t.counts[order.sigma[level]];
    if (count == 0) throw DomainError("level " + std::to_string(level) + " has zero count");

    std::uint64_t removed = 0;
    for (std::size_t i = 1; i <= level; ++i) removed += t.counts[order.sigma[i]];
    const std::uint64_t zeros = t.total() - removed;
    const double raw = std::numbers::ln2 * static_cast<double>(zeros) / static_cast<double>(count);
    const double rounded = std::floor(raw + 0.5);
    return GolombParam(rounded < 1.0 ? 1 : static_cast<std::uint64_t>(rounded));
}

EncodedRunLists extract_runs(const SymbolSequence& x, const TypeVector& t, const RankOrder& order) {
    return extract_runs(x, t, order, kernels::active_kernels());
}

EncodedRunLists extract_runs(const SymbolSequence& x, const TypeVector& t, const RankOrder& order,
                             const kernels::KernelTable& kernels) {
    check_codec_limits(x);
    EncodedRunLists lists;
    lists.runs.resize(t.alphabet_size());
    scan_levels(x, t, order, kernels,
                [&](std::size_t j, std::size_t, std::span<const std::uint64_t> runs) {
                    lists.runs[j].assign(runs.begin(), runs.end());
                });
    return lists;
}

BitBuffer encode(const SymbolSequence& x) { return encode_with_layout(x).bits; }

EncodeResult encode_with_layout(const SymbolSequence& x) {
    return encode_with_layout(x, kernels::active_kernels());
}

EncodeResult encode_with_layout(const SymbolSequence& x, const kernels::KernelTable& kernels) {
    check_codec_limits(x);
    const TypeVector t = compute_type(x);
    const RankOrder order = rank_order(t);

    EncodeResult result;
    BitBuffer& out = result.bits;
    ContainerLayout& layout = result.layout;

    encode_elias_omega(out, x.alphabet_size);
    const std::uint64_t after_l = out.bit_length();
    for (const std::uint64_t c : t.counts) encode_elias_omega(out, c + 1);
    layout.header_bits = out.bit_length();
    layout.type_code_bits = out.bit_length() - after_l;

    scan_levels(x, t, order, kernels,
                [&](std::size_t j, std::size_t index_set_size, std::span<const std::uint64_t> runs) {
                    const GolombParam m = choose_golomb_param(t, order, j);
                    const std::uint64_t start = out.bit_length();
                    for (const std::uint64_t r : runs) encode_golomb(out, r, m);
                    layout.levels.push_back(LevelInfo{
                        .rank = static_cast<std::uint32_t>(j),
                        .symbol = order.sigma[j],
                        .count = runs.size(),
                        .index_set_size = index_set_size,
                        .golomb_m = m.value(),
                        .payload_bits = out.bit_length() - start,
                    });
                });
    layout.payload_bits = out.bit_length() - layout.header_bits;
    return result;
}

SymbolSequence decode(const BitBuffer& bits) { return decode_with_layout(bits).sequence; }

DecodeResult decode_with_layout(const BitBuffer& bits) {
    return decode_with_layout(bits, kernels::active_kernels());
}

DecodeResult decode_with_layout(const BitBuffer& bits, const kernels::KernelTable& kernels) {
    BitCursor cur(bits);
    DecodeResult result;
    ContainerLayout& layout = result.layout;

    const std::uint64_t L = decode_elias_omega(cur);
    // every type code takes at least one bit
    if (L > std::numeric_limits<std::uint32_t>::max() || L > cur.remaining())
        throw FormatError("alphabet size " + std::to_string(L) + " inconsistent with stream length");
    const std::uint64_t after_l = cur.position();

    TypeVector t{std::vector<std::uint64_t>(L)};
    std::uint64_t n = 0;
    for (auto& c : t.counts) {
        c = decode_elias_omega(cur) - 1;
        if (c > kMaxSequenceLength - n) throw FormatError("decoded length exceeds codec limit");
        n += c;
    }
    layout.header_bits = cur.position();
    layout.type_code_bits = cur.position() - after_l;

    const RankOrder order = rank_order(t);
    // every run codeword takes at least one bit
    if (n - t.counts[order.sigma[0]] > cur.remaining())
        throw TruncationError("stream too short for the declared run count");

    SymbolSequence& x = result.sequence;
    x.alphabet_size = static_cast<std::uint32_t>(L);
    x.symbols.assign(n, order.sigma[0]);

    std::vector<std::uint32_t> positions(n);
    std::iota(positions.begin(), positions.end(), 0u);
    std::vector<std::uint64_t> mask(kernels::mask_words(n));

    for (std::size_t j = 1; j < L; ++j) {
        const std::uint32_t symbol = order.sigma[j];
        const std::uint64_t count = t.counts[symbol];
        if (count == 0) break;
        const GolombParam m = choose_golomb_param(t, order, j);
        const std::size_t size = positions.size();
        const std::uint64_t start = cur.position();

        std::fill_n(mask.begin(), kernels::mask_words(size), 0);
        std::uint64_t next = 0;
        for (std::uint64_t k = 0; k < count; ++k) {
            const std::uint64_t run = decode_golomb(cur, m);
            if (run >= size - next)
                throw CorruptDataError("run at level " + std::to_string(j) +
                                       " overshoots its index set");
            const std::uint64_t pos = next + run;
            mask[pos / 64] |= std::uint64_t{1} << (pos % 64);
            x.symbols[positions[pos]] = symbol;
            next = pos + 1;
        }
        layout.levels.push_back(LevelInfo{
            .rank = static_cast<std::uint32_t>(j),
            .symbol = symbol,
            .count = count,
            .index_set_size = size,
            .golomb_m = m.value(),
            .payload_bits = cur.position() - start,
        });

        if (j + 1 < L && t.counts[order.sigma[j + 1]] > 0) {
            const std::size_t kept = kernels.compact_unmatched(
                positions, std::span<const std::uint64_t>(mask).first(kernels::mask_words(size)),
                positions.data());
            positions.resize(kept);
        }
    }
    layout.payload_bits = cur.position() - layout.header_bits;

    const std::uint64_t tail = cur.remaining();
    if (tail >= 8 || (tail > 0 && cur.read_uint(static_cast<unsigned>(tail)) != 0))
        throw FormatError("trailing bits after the last codeword");
    return result;
}

}  // namespace typerun
