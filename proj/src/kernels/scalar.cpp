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

#include "typerun/kernels.hpp"

#include <bit>

namespace typerun::kernels {

namespace {

std::size_t match_mask_scalar(std::span<const std::uint32_t> values, std::uint32_t target,
                              std::span<std::uint64_t> mask) {
    const std::size_t n = values.size();
    std::size_t matches = 0;
    for (std::size_t w = 0; w < mask_words(n); ++w) {
        const std::size_t base = w * 64;
        const std::size_t len = n - base < 64 ? n - base : 64;
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < len; ++i)
            word |= static_cast<std::uint64_t>(values[base + i] == target) << i;
        mask[w] = word;
        matches += static_cast<std::size_t>(std::popcount(word));
    }
    return matches;
}

std::size_t compact_unmatched_scalar(std::span<const std::uint32_t> values,
                                     std::span<const std::uint64_t> mask, std::uint32_t* out) {
    std::size_t written = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::uint32_t v = values[i];
        if (((mask[i / 64] >> (i % 64)) & 1u) == 0) out[written++] = v;
    }
    return written;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
    static constexpr KernelTable table{"scalar", &match_mask_scalar, &compact_unmatched_scalar};
    return table;
}

}  // namespace typerun::kernels
