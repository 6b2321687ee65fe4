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

// Closed-form rate quantities for the type-run scheme: entropy, the per-level
// Golomb cost g(M), the per-level bound and its optimal parameter, the total
// bound H(f) + C(f), and the type-header overhead. All rates are in bits per
// symbol.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "typerun/integer_codecs.hpp"
#include "typerun/typerun_codec.hpp"

namespace typerun::analysis {

/// Additive constant of the per-level bound, used exactly as published.
inline constexpr double kLevelBoundConstant = 2.914;

struct Pmf {
    std::vector<double> probs;

    /// Throws DomainError unless probs are nonnegative and sum to 1 within 1e-12.
    void validate() const;
};

/// Copy sorted by descending probability (stable).
Pmf sorted_descending(const Pmf& f);

/// Normalizes nonnegative weights. Throws DomainError on negative or all-zero weights.
Pmf normalized(std::vector<double> weights);

double entropy(const Pmf& f);

/// t / N. Throws EmptyInputError when N == 0.
Pmf empirical_pmf(const TypeVector& t);

// The following take f already sorted descending; level is a rank in [1, L-1].

/// g(M) = (1 - sum_{m=1..level} f_m) / M + f_level (log2 M + 2)
double golomb_cost_g(const Pmf& sorted, std::size_t level, std::uint64_t m);

/// max(1, round_half_up(ln2 (1 - sum_{m=1..level} f_m) / f_level)).
/// Throws DomainError when f_level == 0.
GolombParam optimal_golomb_param(const Pmf& sorted, std::size_t level);

/// f_level (log2((1 - sum_{m=1..level-1} f_m) / f_level) + 2.914); 0 when f_level == 0.
double theorem1_level_bound(const Pmf& sorted, std::size_t level);

/// C(f) = 2.914 (1 - f_0) + f_0 log2 f_0 + sum_{l>=1} f_l log2(1 - sum_{m=1..l-1} f_m).
/// Sorts internally.
double gap_c(const Pmf& f);

/// H(f) + C(f). Sorts internally.
double total_bound(const Pmf& f);

/// Sum of theorem1_level_bound over every level; algebraically equal to total_bound.
double summed_level_bounds(const Pmf& f);

/// (L / N)(log2(N / L) + 1). Throws DomainError when N < L or L == 0.
double type_overhead_bound(std::uint64_t n, std::uint64_t alphabet_size);

struct BestParam {
    std::uint64_t m = 1;
    std::uint64_t bits = 0;
};

/// Exhaustive oracle: the M in [1, search_cap] that minimizes the Golomb bits of
/// level `level`'s runs (ties to the smaller M). Runs are recomputed here by a
/// direct scan of x, independent of the codec's level machinery. search_cap == 0
/// selects 4 * choose_golomb_param + 8.
BestParam brute_force_best_m(const SymbolSequence& x, const TypeVector& t, const RankOrder& order,
                             std::size_t level, std::uint64_t search_cap = 0);

}  // namespace typerun::analysis
