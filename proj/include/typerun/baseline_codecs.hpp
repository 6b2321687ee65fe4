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

// Comparison codecs: canonical Huffman, symbol-wise Golomb and symbol-wise
// Elias omega, plus an adapter exposing the type-run codec through the same
// interface. Baseline decoders take N from the caller; they carry no framing.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "typerun/bitio.hpp"
#include "typerun/integer_codecs.hpp"
#include "typerun/typerun_codec.hpp"

namespace typerun {

struct SequenceCodecResult {
    BitBuffer bits;
    std::uint64_t total_bits = 0;      // == bits.bit_length()
    std::uint64_t side_info_bits = 0;  // header share of total_bits

    [[nodiscard]] std::uint64_t payload_bits() const noexcept { return total_bits - side_info_bits; }
};

/// Canonical Huffman code. lengths[s] == 0 means s has no codeword.
struct HuffmanCodebook {
    std::vector<std::uint32_t> lengths;
    std::vector<std::uint64_t> codes;

    /// Rebuilds canonical codes from code lengths (shorter first, ties by symbol).
    static HuffmanCodebook from_lengths(std::vector<std::uint32_t> lengths);

    friend bool operator==(const HuffmanCodebook&, const HuffmanCodebook&) = default;
};

/// Two-least-frequent merge over the nonzero counts; merge ties go to the
/// smaller weight, then the smaller minimum symbol index. A lone symbol gets
/// a 1-bit code. Throws EmptyInputError if every count is zero.
HuffmanCodebook huffman_build(const TypeVector& t);

/// Emits the codebook header (omega(length + 1) per symbol, counted as side
/// information) followed by the codewords. Throws CoverageError for symbols
/// without a codeword.
SequenceCodecResult huffman_encode(const SymbolSequence& x, const HuffmanCodebook& book);

/// Reads the header back, checks it against book (FormatError on mismatch)
/// and decodes n symbols.
SymbolSequence huffman_decode(const BitBuffer& bits, const HuffmanCodebook& book, std::size_t n);

SequenceCodecResult symbolwise_golomb_encode(const SymbolSequence& x, GolombParam m);
SymbolSequence symbolwise_golomb_decode(const BitBuffer& bits, GolombParam m, std::size_t n,
                                        std::uint32_t alphabet_size);

/// Each symbol s is written as omega(s + 1).
SequenceCodecResult symbolwise_elias_encode(const SymbolSequence& x);
SymbolSequence symbolwise_elias_decode(const BitBuffer& bits, std::size_t n,
                                       std::uint32_t alphabet_size);

/// Uniform face over every codec the benchmark compares.
class SequenceCodec {
public:
    virtual ~SequenceCodec() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    virtual SequenceCodecResult encode(const SymbolSequence& x) = 0;
    /// Inverse of the most recent encode() for codecs with per-input state
    /// (Huffman keeps its codebook).
    virtual SymbolSequence decode(const BitBuffer& bits, std::size_t n,
                                  std::uint32_t alphabet_size) = 0;
};

/// The type-run container; side_info_bits is the type header.
std::unique_ptr<SequenceCodec> make_typerun_codec();
std::unique_ptr<SequenceCodec> make_huffman_codec();
std::unique_ptr<SequenceCodec> make_symbolwise_golomb_codec(GolombParam m);
std::unique_ptr<SequenceCodec> make_symbolwise_elias_codec();

}  // namespace typerun
