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

#include "typerun/bitio.hpp"

#include <algorithm>
#include <bit>

#include "typerun/errors.hpp"

namespace typerun {

BitBuffer BitBuffer::from_bytes(std::vector<std::uint8_t> bytes) {
    const std::uint64_t bits = 8 * static_cast<std::uint64_t>(bytes.size());
    return from_bytes(std::move(bytes), bits);
}

BitBuffer BitBuffer::from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t bit_length) {
    if (bit_length > 8 * static_cast<std::uint64_t>(bytes.size()))
        throw RangeError("bit_length exceeds byte storage");
    if ((bit_length + 7) / 8 != bytes.size())
        throw RangeError("byte storage has unused trailing bytes");
    if (const unsigned used = bit_length % 8; used != 0) {
        const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> used);
        if ((bytes.back() & pad_mask) != 0) throw RangeError("nonzero padding bits");
    }
    BitBuffer buf;
    buf.bytes_ = std::move(bytes);
    buf.bit_length_ = bit_length;
    return buf;
}

void BitBuffer::write_bit(unsigned bit) {
    if (bit_length_ % 8 == 0) bytes_.push_back(0);
    if (bit & 1u) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_length_ % 8));
    ++bit_length_;
}

void BitBuffer::write_uint(std::uint64_t value, unsigned width) {
    if (width > 64) throw RangeError("write_uint width exceeds 64 bits");
    if (width < 64 && (value >> width) != 0)
        throw RangeError("value " + std::to_string(value) + " does not fit in " +
                         std::to_string(width) + " bits");
    while (width > 0) {
        unsigned offset = bit_length_ % 8;
        if (offset == 0) bytes_.push_back(0);
        const unsigned free_bits = 8 - offset;
        const unsigned take = std::min(free_bits, width);
        const std::uint64_t chunk = (value >> (width - take)) & ((1u << take) - 1u);
        bytes_.back() |= static_cast<std::uint8_t>(chunk << (free_bits - take));
        width -= take;
        bit_length_ += take;
    }
}

void BitBuffer::write_repeated(unsigned bit, std::uint64_t count) {
    const std::uint64_t ones = (bit & 1u) ? ~std::uint64_t{0} : 0;
    while (count >= 64) {
        write_uint(ones, 64);
        count -= 64;
    }
    if (count > 0) write_uint(ones >> (64 - count), static_cast<unsigned>(count));
}

void BitBuffer::append(const BitBuffer& other) {
    BitCursor cur(other);
    while (cur.remaining() >= 64) write_uint(cur.read_uint(64), 64);
    const auto tail = static_cast<unsigned>(cur.remaining());
    write_uint(cur.read_uint(tail), tail);
}

unsigned BitBuffer::bit_at(std::uint64_t position) const {
    if (position >= bit_length_) throw UnderrunError("bit_at past end of buffer");
    return (bytes_[position / 8] >> (7 - position % 8)) & 1u;
}

std::string BitBuffer::to_bit_string() const {
    std::string out;
    out.reserve(bit_length_);
    for (std::uint64_t i = 0; i < bit_length_; ++i) out.push_back(bit_at(i) ? '1' : '0');
    return out;
}

BitCursor::BitCursor(const BitBuffer& buffer, std::uint64_t position)
    : buffer_(&buffer), position_(position) {
    if (position > buffer.bit_length()) throw RangeError("cursor position past end of buffer");
}

std::uint64_t BitCursor::remaining() const noexcept { return buffer_->bit_length() - position_; }

unsigned BitCursor::read_bit() {
    if (position_ >= buffer_->bit_length()) throw UnderrunError("read_bit: bit stream exhausted");
    const unsigned bit = (buffer_->bytes()[position_ / 8] >> (7 - position_ % 8)) & 1u;
    ++position_;
    return bit;
}

std::uint64_t BitCursor::read_uint(unsigned width) {
    if (width > 64) throw RangeError("read_uint width exceeds 64 bits");
    if (width > remaining())
        throw UnderrunError("read_uint: " + std::to_string(width) + " bits requested, " +
                            std::to_string(remaining()) + " available");
    const auto bytes = buffer_->bytes();
    std::uint64_t value = 0;
    while (width > 0) {
        const unsigned offset = position_ % 8;
        const unsigned avail = 8 - offset;
        const unsigned take = std::min(avail, width);
        const unsigned byte = bytes[position_ / 8];
        const unsigned chunk = (byte >> (avail - take)) & ((1u << take) - 1u);
        value = (value << take) | chunk;
        width -= take;
        position_ += take;
    }
    return value;
}

std::uint64_t BitCursor::read_unary() {
    const auto bytes = buffer_->bytes();
    const std::uint64_t end = buffer_->bit_length();
    std::uint64_t ones = 0;
    std::uint64_t pos = position_;
    while (pos < end) {
        const unsigned offset = pos % 8;
        const auto avail = static_cast<unsigned>(std::min<std::uint64_t>(8 - offset, end - pos));
        const auto shifted = static_cast<std::uint8_t>(bytes[pos / 8] << offset);
        const auto run = std::min<unsigned>(static_cast<unsigned>(std::countl_one(shifted)), avail);
        if (run < avail) {
            position_ = pos + run + 1;
            return ones + run;
        }
        ones += avail;
        pos += avail;
    }
    throw UnderrunError("read_unary: bit stream exhausted before terminator");
}

}  // namespace typerun
