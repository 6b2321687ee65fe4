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

// Data-parallel inner loops of the level scan. Each kernel has a portable
// scalar reference; vector variants must produce bit-identical results and
// are chosen once at runtime from what the CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace typerun::kernels {

/// Number of 64-bit words needed to hold one mask bit per element.
constexpr std::size_t mask_words(std::size_t n) noexcept { return (n + 63) / 64; }

struct KernelTable {
    std::string_view name;

    /// Sets bit i of mask (word i / 64, bit i % 64) iff values[i] == target;
    /// bits past values.size() in the last word are cleared. mask must hold
    /// mask_words(values.size()) words. Returns the number of matches.
    std::size_t (*match_mask)(std::span<const std::uint32_t> values, std::uint32_t target,
                              std::span<std::uint64_t> mask);

    /// Copies, in order, the elements of values whose mask bit is clear into
    /// out and returns how many were written. out may alias values (the write
    /// index never passes the read index); it must have room for
    /// values.size() elements.
    std::size_t (*compact_unmatched)(std::span<const std::uint32_t> values,
                                     std::span<const std::uint64_t> mask, std::uint32_t* out);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the build has no AVX2 path or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Best available table. Setting TYPERUN_KERNELS=scalar in the environment
/// forces the reference path.
const KernelTable& active_kernels() noexcept;

}  // namespace typerun::kernels
