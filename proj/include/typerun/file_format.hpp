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

// On-disk formats used by the command-line tool.
//
// Container file: "TRLC" (4 bytes), version byte 0x01, then the type-run
// container bytes exactly as produced by encode().
//
// Symbol files: text (whitespace-separated decimal integers) or u16le
// (consecutive little-endian 16-bit unsigned values).

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typerun/bitio.hpp"

namespace typerun {

inline constexpr std::string_view kContainerMagic = "TRLC";
inline constexpr std::uint8_t kContainerVersion = 0x01;

enum class SymbolFormat { text, u16le };

/// Throws ConfigError for anything other than "text" or "u16le".
SymbolFormat parse_symbol_format(std::string_view name);

std::vector<std::uint8_t> wrap_container(const BitBuffer& bits);

/// Throws FormatError on a short file, wrong magic or unknown version.
BitBuffer unwrap_container(std::span<const std::uint8_t> file);

/// Throws FormatError on malformed content (non-numeric token, odd byte count,
/// value above 2^32 - 1).
std::vector<std::uint32_t> parse_symbols(std::span<const std::uint8_t> data, SymbolFormat format);

/// Throws RangeError if a symbol does not fit u16le.
std::vector<std::uint8_t> format_symbols(std::span<const std::uint32_t> symbols, SymbolFormat format);

/// Throw IoError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data);

}  // namespace typerun
