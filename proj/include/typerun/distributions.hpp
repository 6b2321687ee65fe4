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
#include <random>
#include <string>

#include "typerun/analysis.hpp"
#include "typerun/typerun_codec.hpp"

namespace typerun {

enum class DistributionKind { geometric, bimodal, custom };

/// Source model for synthetic inputs.
///
/// geometric: f_l proportional to (1 - p)^l p on [0, L), renormalized.
/// bimodal:   equal-weight mixture of binomial(n, q) and the same pmf shifted
///            by `shift`, truncated to [0, L) and renormalized. Defaults
///            reproduce n = 50, q = 0.33, shift = 20, L = 51.
/// custom:    an explicit pmf.
struct DistributionSpec {
    DistributionKind kind = DistributionKind::geometric;
    double p = 0.33;
    std::uint32_t alphabet_size = 50;
    std::uint32_t binomial_n = 50;
    double binomial_p = 0.33;
    std::uint32_t shift = 20;
    analysis::Pmf custom_pmf;

    static DistributionSpec geometric(double p, std::uint32_t alphabet_size);
    static DistributionSpec bimodal(std::uint32_t alphabet_size = 51);
    static DistributionSpec custom(analysis::Pmf pmf);

    [[nodiscard]] std::string label() const;
};

/// The exact pmf the sampler draws from. Throws ConfigError on invalid parameters.
analysis::Pmf distribution_pmf(const DistributionSpec& spec);

/// std::mt19937_64 with a portable mapping to doubles: the top 53 bits of each
/// output scaled by 2^-53. Streams are identical on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// n i.i.d. draws by inverse CDF over distribution_pmf(spec).
SymbolSequence sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

/// n i.i.d. draws from an explicit pmf using a caller-owned generator.
SymbolSequence sample_pmf(const analysis::Pmf& pmf, std::size_t n, Rng& rng);

}  // namespace typerun
