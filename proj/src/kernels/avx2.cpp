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

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TYPERUN_HAVE_AVX2_PATH 1
#include <immintrin.h>

#include <array>
#include <bit>
#endif

namespace typerun::kernels {

#if TYPERUN_HAVE_AVX2_PATH

namespace {

#define TYPERUN_AVX2 __attribute__((target("avx2,popcnt")))

// For each 8-bit keep mask, lane indices of the kept elements packed to the front.
constexpr std::array<std::array<std::uint32_t, 8>, 256> make_compaction_lut() {
    std::array<std::array<std::uint32_t, 8>, 256> lut{};
    for (unsigned keep = 0; keep < 256; ++keep) {
        unsigned out = 0;
        for (unsigned lane = 0; lane < 8; ++lane)
            if (keep & (1u << lane)) lut[keep][out++] = lane;
        for (; out < 8; ++out) lut[keep][out] = 0;
    }
    return lut;
}

alignas(32) constexpr auto kCompactionLut = make_compaction_lut();

TYPERUN_AVX2 std::size_t match_mask_avx2(std::span<const std::uint32_t> values,
                                         std::uint32_t target, std::span<std::uint64_t> mask) {
    const std::size_t n = values.size();
    const std::uint32_t* src = values.data();
    const __m256i needle = _mm256_set1_epi32(static_cast<int>(target));
    std::size_t matches = 0;
    std::size_t w = 0;
    for (; (w + 1) * 64 <= n; ++w) {
        std::uint64_t word = 0;
        for (unsigned k = 0; k < 8; ++k) {
            const __m256i v =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w * 64 + k * 8));
            const __m256i eq = _mm256_cmpeq_epi32(v, needle);
            const auto bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
            word |= static_cast<std::uint64_t>(bits) << (k * 8);
        }
        mask[w] = word;
        matches += static_cast<std::size_t>(std::popcount(word));
    }
    if (w * 64 < n) {
        std::uint64_t word = 0;
        for (std::size_t i = w * 64; i < n; ++i)
            word |= static_cast<std::uint64_t>(src[i] == target) << (i % 64);
        mask[w] = word;
        matches += static_cast<std::size_t>(std::popcount(word));
    }
    return matches;
}

TYPERUN_AVX2 std::size_t compact_unmatched_avx2(std::span<const std::uint32_t> values,
                                                std::span<const std::uint64_t> mask,
                                                std::uint32_t* out) {
    const std::size_t n = values.size();
    const std::uint32_t* src = values.data();
    std::size_t written = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const auto drop = static_cast<unsigned>((mask[i / 64] >> (i % 64)) & 0xFFu);
        const unsigned keep = ~drop & 0xFFu;
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i perm =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(kCompactionLut[keep].data()));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + written),
                            _mm256_permutevar8x32_epi32(v, perm));
        written += static_cast<std::size_t>(std::popcount(keep));
    }
    for (; i < n; ++i) {
        const std::uint32_t v = src[i];
        if (((mask[i / 64] >> (i % 64)) & 1u) == 0) out[written++] = v;
    }
    return written;
}

#undef TYPERUN_AVX2

}  // namespace

const KernelTable* avx2_kernels() noexcept {
    static constexpr KernelTable table{"avx2", &match_mask_avx2, &compact_unmatched_avx2};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace typerun::kernels
