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

#include "typerun/integer_codecs.hpp"

#include <array>
#include <bit>

#include "typerun/errors.hpp"

namespace typerun {

namespace {

// ceil(log2 m) for m >= 1
unsigned ceil_log2(std::uint64_t m) {
    return m <= 1 ? 0u : static_cast<unsigned>(std::bit_width(m - 1));
}

}  // namespace

GolombParam::GolombParam(std::uint64_t m) : m_(m) {
    if (m == 0) throw RangeError("Golomb parameter must be >= 1");
}

void encode_unary(BitBuffer& buf, std::uint64_t q) {
    buf.write_repeated(1, q);
    buf.write_bit(0);
}

std::uint64_t decode_unary(BitCursor& cur) { return cur.read_unary(); }

void encode_truncated_binary(BitBuffer& buf, std::uint64_t v, GolombParam m) {
    const std::uint64_t M = m.value();
    if (v >= M)
        throw RangeError("truncated binary value " + std::to_string(v) + " not below M=" +
                         std::to_string(M));
    if (M == 1) return;
    const unsigned b = ceil_log2(M);
    // k = 2^b - M, computed without overflowing when b == 64
    const std::uint64_t k = (b == 64 ? 0 - M : (std::uint64_t{1} << b) - M);
    if (v < k)
        buf.write_uint(v, b - 1);
    else
        buf.write_uint(v + k, b);
}

std::uint64_t decode_truncated_binary(BitCursor& cur, GolombParam m) {
    const std::uint64_t M = m.value();
    if (M == 1) return 0;
    const unsigned b = ceil_log2(M);
    const std::uint64_t k = (b == 64 ? 0 - M : (std::uint64_t{1} << b) - M);
    const std::uint64_t prefix = cur.read_uint(b - 1);
    if (prefix < k) return prefix;
    return ((prefix << 1) | cur.read_bit()) - k;
}

unsigned truncated_binary_length(std::uint64_t v, GolombParam m) {
    const std::uint64_t M = m.value();
    if (M == 1) return 0;
    const unsigned b = ceil_log2(M);
    const std::uint64_t k = (b == 64 ? 0 - M : (std::uint64_t{1} << b) - M);
    return v < k ? b - 1 : b;
}

void encode_golomb(BitBuffer& buf, std::uint64_t r, GolombParam m) {
    encode_unary(buf, r / m.value());
    encode_truncated_binary(buf, r % m.value(), m);
}

std::uint64_t decode_golomb(BitCursor& cur, GolombParam m) {
    const std::uint64_t q = decode_unary(cur);
    const std::uint64_t rem = decode_truncated_binary(cur, m);
    if (q > (~std::uint64_t{0} - rem) / m.value())
        throw CorruptDataError("Golomb codeword overflows 64 bits");
    return q * m.value() + rem;
}

std::uint64_t golomb_length(std::uint64_t r, GolombParam m) {
    return r / m.value() + 1 + truncated_binary_length(r % m.value(), m);
}

void encode_elias_omega(BitBuffer& buf, std::uint64_t v) {
    if (v == 0) throw RangeError("Elias omega encodes positive integers only");
    // Groups are produced last-to-first; at most 6 groups for 64-bit input.
    std::array<std::uint64_t, 8> groups{};
    std::size_t count = 0;
    while (v > 1) {
        groups[count++] = v;
        v = static_cast<std::uint64_t>(std::bit_width(v)) - 1;
    }
    while (count > 0) {
        const std::uint64_t g = groups[--count];
        buf.write_uint(g, static_cast<unsigned>(std::bit_width(g)));
    }
    buf.write_bit(0);
}

std::uint64_t decode_elias_omega(BitCursor& cur) {
    std::uint64_t n = 1;
    while (cur.read_bit() == 1) {
        if (n > 63) throw CorruptDataError("Elias omega group longer than 64 bits");
        const auto width = static_cast<unsigned>(n);
        n = (std::uint64_t{1} << width) | cur.read_uint(width);
    }
    return n;
}

unsigned elias_omega_length(std::uint64_t v) {
    if (v == 0) throw RangeError("Elias omega encodes positive integers only");
    unsigned len = 1;
    while (v > 1) {
        const auto w = static_cast<unsigned>(std::bit_width(v));
        len += w;
        v = w - 1;
    }
    return len;
}

}  // namespace typerun
