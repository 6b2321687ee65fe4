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

#include <cstdint>

#include "typerun/bitio.hpp"

namespace typerun {

/// Golomb modulus. Always >= 1; construction with 0 throws RangeError.
class GolombParam {
public:
    explicit GolombParam(std::uint64_t m);

    [[nodiscard]] std::uint64_t value() const noexcept { return m_; }

    friend bool operator==(GolombParam, GolombParam) = default;

private:
    std::uint64_t m_;
};

// Unary: q one-bits followed by a terminating zero (q + 1 bits).
void encode_unary(BitBuffer& buf, std::uint64_t q);
std::uint64_t decode_unary(BitCursor& cur);

/// Truncated binary code of v in [0, M). With b = ceil(log2 M) and
/// k = 2^b - M, values below k take b - 1 bits and the rest take b bits
/// (as v + k). M = 1 emits nothing.
void encode_truncated_binary(BitBuffer& buf, std::uint64_t v, GolombParam m);
std::uint64_t decode_truncated_binary(BitCursor& cur, GolombParam m);
[[nodiscard]] unsigned truncated_binary_length(std::uint64_t v, GolombParam m);

/// Golomb code: unary(r / M) followed by truncated_binary(r mod M).
void encode_golomb(BitBuffer& buf, std::uint64_t r, GolombParam m);
std::uint64_t decode_golomb(BitCursor& cur, GolombParam m);
[[nodiscard]] std::uint64_t golomb_length(std::uint64_t r, GolombParam m);

/// Elias omega code for v >= 1. Encoding 0 throws RangeError.
void encode_elias_omega(BitBuffer& buf, std::uint64_t v);
/// Throws TruncationError on a cut-off codeword and CorruptDataError when a
/// length group would exceed 64 bits.
std::uint64_t decode_elias_omega(BitCursor& cur);
[[nodiscard]] unsigned elias_omega_length(std::uint64_t v);

}  // namespace typerun
