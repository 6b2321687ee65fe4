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
#include <span>
#include <string>
#include <vector>

namespace typerun {

/// Append-only bit sequence, MSB-first within each byte.
///
/// Bits past bit_length() in the last byte are always zero, so bytes() can be
/// written to disk as-is. Bit 0 of the stream is the most significant bit of
/// byte 0.
class BitBuffer {
public:
    BitBuffer() = default;

    /// Wraps raw bytes; every bit of every byte counts as valid.
    static BitBuffer from_bytes(std::vector<std::uint8_t> bytes);

    /// Wraps raw bytes with an explicit bit length. Throws RangeError if
    /// bit_length exceeds 8 * bytes.size() or padding bits are nonzero.
    static BitBuffer from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t bit_length);

    void write_bit(unsigned bit);

    /// Appends the width-bit big-endian representation of value (width <= 64).
    void write_uint(std::uint64_t value, unsigned width);

    /// Appends count copies of bit.
    void write_repeated(unsigned bit, std::uint64_t count);

    void append(const BitBuffer& other);

    [[nodiscard]] std::uint64_t bit_length() const noexcept { return bit_length_; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    [[nodiscard]] std::vector<std::uint8_t> release_bytes() && { return std::move(bytes_); }
    [[nodiscard]] unsigned bit_at(std::uint64_t position) const;

    /// "0101..." rendering, for tests and debugging.
    [[nodiscard]] std::string to_bit_string() const;

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bit_length_ = 0;
};

/// Read position over a BitBuffer. The buffer must outlive the cursor.
class BitCursor {
public:
    explicit BitCursor(const BitBuffer& buffer, std::uint64_t position = 0);

    /// Throws UnderrunError at end of stream.
    unsigned read_bit();

    /// Reads width bits as a big-endian unsigned value (width <= 64).
    std::uint64_t read_uint(unsigned width);

    /// Counts one-bits up to and including the terminating zero; returns the
    /// number of ones. Throws UnderrunError if the zero never arrives.
    std::uint64_t read_unary();

    [[nodiscard]] std::uint64_t position() const noexcept { return position_; }
    [[nodiscard]] std::uint64_t remaining() const noexcept;
    [[nodiscard]] const BitBuffer& buffer() const noexcept { return *buffer_; }

private:
    const BitBuffer* buffer_;
    std::uint64_t position_;
};

}  // namespace typerun
