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

#include "typerun/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "typerun/errors.hpp"

namespace typerun {

namespace {

double binomial_pmf(std::uint32_t n, double q, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(n)) return 0.0;
    if (q <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (q >= 1.0) return k == static_cast<std::int64_t>(n) ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    const double log_choose = std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1);
    return std::exp(log_choose + kd * std::log(q) + (nd - kd) * std::log1p(-q));
}

}  // namespace

DistributionSpec DistributionSpec::geometric(double p, std::uint32_t alphabet_size) {
    DistributionSpec spec;
    spec.kind = DistributionKind::geometric;
    spec.p = p;
    spec.alphabet_size = alphabet_size;
    return spec;
}

DistributionSpec DistributionSpec::bimodal(std::uint32_t alphabet_size) {
    DistributionSpec spec;
    spec.kind = DistributionKind::bimodal;
    spec.alphabet_size = alphabet_size;
    return spec;
}

DistributionSpec DistributionSpec::custom(analysis::Pmf pmf) {
    DistributionSpec spec;
    spec.kind = DistributionKind::custom;
    spec.alphabet_size = static_cast<std::uint32_t>(pmf.probs.size());
    spec.custom_pmf = std::move(pmf);
    return spec;
}

std::string DistributionSpec::label() const {
    std::ostringstream os;
    switch (kind) {
        case DistributionKind::geometric: os << "geometric(p=" << p << ")"; break;
        case DistributionKind::bimodal:
            os << "bimodal(n=" << binomial_n << ";q=" << binomial_p << ";shift=" << shift << ")";
            break;
        case DistributionKind::custom: os << "custom"; break;
    }
    return os.str();
}

analysis::Pmf distribution_pmf(const DistributionSpec& spec) {
    if (spec.alphabet_size == 0) throw ConfigError("alphabet size must be >= 1");
    std::vector<double> weights(spec.alphabet_size, 0.0);
    switch (spec.kind) {
        case DistributionKind::geometric:
            if (!(spec.p > 0.0 && spec.p <= 1.0)) throw ConfigError("geometric p must be in (0, 1]");
            for (std::uint32_t l = 0; l < spec.alphabet_size; ++l)
                weights[l] = std::pow(1.0 - spec.p, l) * spec.p;
            break;
        case DistributionKind::bimodal:
            if (!(spec.binomial_p >= 0.0 && spec.binomial_p <= 1.0))
                throw ConfigError("binomial q must be in [0, 1]");
            for (std::uint32_t l = 0; l < spec.alphabet_size; ++l) {
                const auto k = static_cast<std::int64_t>(l);
                weights[l] = 0.5 * binomial_pmf(spec.binomial_n, spec.binomial_p, k) +
                             0.5 * binomial_pmf(spec.binomial_n, spec.binomial_p, k - spec.shift);
            }
            break;
        case DistributionKind::custom:
            if (spec.custom_pmf.probs.size() != spec.alphabet_size)
                throw ConfigError("custom pmf size does not match the alphabet size");
            weights = spec.custom_pmf.probs;
            break;
    }
    try {
        return analysis::normalized(std::move(weights));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid distribution: ") + e.what());
    }
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw RangeError("Rng::below needs a positive bound");
    // rejection sampling keeps the result exactly uniform
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t v;
    do v = engine_(); while (v < threshold);
    return v % bound;
}

SymbolSequence sample_pmf(const analysis::Pmf& pmf, std::size_t n, Rng& rng) {
    const std::size_t L = pmf.probs.size();
    if (L == 0) throw ConfigError("empty pmf");
    std::vector<double> cdf(L);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t l = 0; l < L; ++l) {
        acc += pmf.probs[l];
        cdf[l] = acc;
        if (pmf.probs[l] > 0.0) last_positive = l;
    }

    SymbolSequence x;
    x.alphabet_size = static_cast<std::uint32_t>(L);
    x.symbols.resize(n);
    for (auto& s : x.symbols) {
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::size_t>(it - cdf.begin());
        s = static_cast<std::uint32_t>(std::min(idx, last_positive));
    }
    return x;
}

SymbolSequence sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_pmf(distribution_pmf(spec), n, rng);
}

}  // namespace typerun
