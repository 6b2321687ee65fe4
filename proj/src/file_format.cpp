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

#include "typerun/file_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>

#include "typerun/errors.hpp"

namespace typerun {

SymbolFormat parse_symbol_format(std::string_view name) {
    if (name == "text") return SymbolFormat::text;
    if (name == "u16le") return SymbolFormat::u16le;
    throw ConfigError("unknown symbol format '" + std::string(name) + "'");
}

std::vector<std::uint8_t> wrap_container(const BitBuffer& bits) {
    std::vector<std::uint8_t> file(kContainerMagic.begin(), kContainerMagic.end());
    file.push_back(kContainerVersion);
    const auto body = bits.bytes();
    file.insert(file.end(), body.begin(), body.end());
    return file;
}

BitBuffer unwrap_container(std::span<const std::uint8_t> file) {
    const std::size_t prefix = kContainerMagic.size() + 1;
    if (file.size() < prefix) throw FormatError("file too short for a container header");
    if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), file.begin()))
        throw FormatError("bad magic, not a TRLC container");
    if (file[kContainerMagic.size()] != kContainerVersion)
        throw FormatError("unsupported container version " +
                          std::to_string(file[kContainerMagic.size()]));
    return BitBuffer::from_bytes(std::vector<std::uint8_t>(file.begin() + prefix, file.end()));
}

std::vector<std::uint32_t> parse_symbols(std::span<const std::uint8_t> data, SymbolFormat format) {
    std::vector<std::uint32_t> symbols;
    if (format == SymbolFormat::u16le) {
        if (data.size() % 2 != 0) throw FormatError("u16le input has an odd number of bytes");
        symbols.reserve(data.size() / 2);
        for (std::size_t i = 0; i < data.size(); i += 2)
            symbols.push_back(static_cast<std::uint32_t>(data[i]) |
                              (static_cast<std::uint32_t>(data[i + 1]) << 8));
        return symbols;
    }

    const char* p = reinterpret_cast<const char*>(data.data());
    const char* end = p + data.size();
    while (p < end) {
        if (std::isspace(static_cast<unsigned char>(*p))) {
            ++p;
            continue;
        }
        std::uint32_t value = 0;
        const auto [next, ec] = std::from_chars(p, end, value);
        if (ec == std::errc::result_out_of_range) throw FormatError("symbol value too large");
        if (ec != std::errc() || (next < end && !std::isspace(static_cast<unsigned char>(*next))))
            throw FormatError("malformed symbol near offset " +
                              std::to_string(p - reinterpret_cast<const char*>(data.data())));
        symbols.push_back(value);
        p = next;
    }
    return symbols;
}

std::vector<std::uint8_t> format_symbols(std::span<const std::uint32_t> symbols, SymbolFormat format) {
    std::vector<std::uint8_t> out;
    if (format == SymbolFormat::u16le) {
        out.reserve(symbols.size() * 2);
        for (const std::uint32_t s : symbols) {
            if (s > std::numeric_limits<std::uint16_t>::max())
                throw RangeError("symbol " + std::to_string(s) + " does not fit u16le");
            out.push_back(static_cast<std::uint8_t>(s & 0xFF));
            out.push_back(static_cast<std::uint8_t>(s >> 8));
        }
        return out;
    }
    for (const std::uint32_t s : symbols) {
        const std::string token = std::to_string(s);
        out.insert(out.end(), token.begin(), token.end());
        out.push_back('\n');
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace typerun
