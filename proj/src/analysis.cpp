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

#include "typerun/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "typerun/errors.hpp"

namespace typerun::analysis {

namespace {

// 1 - sum_{m=1..last} f_m over a descending-sorted pmf
double mass_outside_ranks(const Pmf& sorted, std::size_t last) {
    double removed = 0.0;
    for (std::size_t m = 1; m <= last && m < sorted.probs.size(); ++m) removed += sorted.probs[m];
    return 1.0 - removed;
}

void check_level(const Pmf& sorted, std::size_t level) {
    if (level == 0 || level >= sorted.probs.size())
        throw DomainError("level " + std::to_string(level) + " outside [1, L-1]");
}

}  // namespace

void Pmf::validate() const {
    double sum = 0.0;
    for (const double p : probs) {
        if (!(p >= 0.0)) throw DomainError("probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw DomainError("probabilities must sum to 1");
}

Pmf sorted_descending(const Pmf& f) {
    Pmf out = f;
    std::stable_sort(out.probs.begin(), out.probs.end(), std::greater<>());
    return out;
}

Pmf normalized(std::vector<double> weights) {
    double sum = 0.0;
    for (const double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be finite and nonnegative");
        sum += w;
    }
    if (sum <= 0.0) throw DomainError("weights sum to zero");
    for (double& w : weights) w /= sum;
    return Pmf{std::move(weights)};
}

double entropy(const Pmf& f) {
    double h = 0.0;
    for (const double p : f.probs)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

Pmf empirical_pmf(const TypeVector& t) {
    const std::uint64_t n = t.total();
    if (n == 0) throw EmptyInputError("empirical pmf of an empty sequence");
    Pmf f;
    f.probs.reserve(t.alphabet_size());
    for (const std::uint64_t c : t.counts)
        f.probs.push_back(static_cast<double>(c) / static_cast<double>(n));
    return f;
}

double golomb_cost_g(const Pmf& sorted, std::size_t level, std::uint64_t m) {
    check_level(sorted, level);
    if (m == 0) throw DomainError("Golomb parameter must be >= 1");
    const double md = static_cast<double>(m);
    return mass_outside_ranks(sorted, level) / md + sorted.probs[level] * (std::log2(md) + 2.0);
}

GolombParam optimal_golomb_param(const Pmf& sorted, std::size_t level) {
    check_level(sorted, level);
    const double f = sorted.probs[level];
    if (f <= 0.0) throw DomainError("level " + std::to_string(level) + " has zero probability");
    const double rest = std::max(0.0, mass_outside_ranks(sorted, level));
    const double rounded = std::floor(std::numbers::ln2 * rest / f + 0.5);
    return GolombParam(rounded < 1.0 ? 1 : static_cast<std::uint64_t>(rounded));
}

double theorem1_level_bound(const Pmf& sorted, std::size_t level) {
    check_level(sorted, level);
    const double f = sorted.probs[level];
    if (f <= 0.0) return 0.0;
    // remaining mass includes f itself; rounding can only push it below f
    const double rest = std::max(f, mass_outside_ranks(sorted, level - 1));
    return f * (std::log2(rest / f) + kLevelBoundConstant);
}

double gap_c(const Pmf& f) {
    const Pmf s = sorted_descending(f);
    if (s.probs.empty()) return 0.0;
    const double f0 = s.probs[0];
    double c = kLevelBoundConstant * (1.0 - f0);
    if (f0 > 0.0) c += f0 * std::log2(f0);
    double removed = 0.0;  // sum_{m=1..l-1} f_m
    for (std::size_t l = 1; l < s.probs.size(); ++l) {
        if (s.probs[l] > 0.0) c += s.probs[l] * std::log2(1.0 - removed);
        removed += s.probs[l];
    }
    return c;
}

double total_bound(const Pmf& f) { return entropy(f) + gap_c(f); }

double summed_level_bounds(const Pmf& f) {
    const Pmf s = sorted_descending(f);
    double sum = 0.0;
    for (std::size_t l = 1; l < s.probs.size(); ++l) sum += theorem1_level_bound(s, l);
    return sum;
}

double type_overhead_bound(std::uint64_t n, std::uint64_t alphabet_size) {
    if (alphabet_size == 0 || n < alphabet_size)
        throw DomainError("type overhead bound needs N >= L >= 1");
    const double ratio = static_cast<double>(n) / static_cast<double>(alphabet_size);
    return (std::log2(ratio) + 1.0) / ratio;
}

BestParam brute_force_best_m(const SymbolSequence& x, const TypeVector& t, const RankOrder& order,
                             std::size_t level, std::uint64_t search_cap) {
    const std::size_t L = t.alphabet_size();
    if (level == 0 || level >= L) throw DomainError("level outside [1, L-1]");
    const std::uint32_t target = order.sigma[level];
    if (t.counts[target] == 0) throw DomainError("level has zero count");

    std::vector<bool> earlier(L, false);
    for (std::size_t i = 1; i < level; ++i) earlier[order.sigma[i]] = true;

    std::vector<std::uint64_t> runs;
    std::uint64_t run = 0;
    for (const std::uint32_t s : x.symbols) {
        if (earlier[s]) continue;
        if (s == target) {
            runs.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }

    if (search_cap == 0) search_cap = 4 * choose_golomb_param(t, order, level).value() + 8;
    BestParam best{0, 0};
    for (std::uint64_t m = 1; m <= search_cap; ++m) {
        BitBuffer scratch;
        for (const std::uint64_t r : runs) encode_golomb(scratch, r, GolombParam(m));
        if (best.m == 0 || scratch.bit_length() < best.bits) best = {m, scratch.bit_length()};
    }
    return best;
}

}  // namespace typerun::analysis
