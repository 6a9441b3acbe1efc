// Copyright 2026 The binphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "binphase/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binphase {

namespace {

constexpr double kProbabilitySlack = 1e-9;

double checked_probability(double p) {
    if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
        throw std::invalid_argument("sample_ratio: probability outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

// Inversion started at the mode, walking outwards one step down and one step
// up at a time. Cost is O(sqrt(n p q)) and nothing underflows, unlike
// inversion from k = 0.
std::uint64_t binomial_by_inversion(std::uint64_t n, double p, std::mt19937_64 &rng) {
    const double q = 1.0 - p;
    const double nd = static_cast<double>(n);
    const auto mode = std::min(n, static_cast<std::uint64_t>(std::floor((nd + 1.0) * p)));
    const double md = static_cast<double>(mode);
    const double log_pmf = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                           std::lgamma(nd - md + 1.0) + md * std::log(p) +
                           (nd - md) * std::log1p(-p);

    double u = uniform01(rng);
    const double pmf_mode = std::exp(log_pmf);
    u -= pmf_mode;
    if (u <= 0.0) {
        return mode;
    }
    std::uint64_t lo = mode;
    std::uint64_t hi = mode;
    double pmf_lo = pmf_mode;
    double pmf_hi = pmf_mode;
    while (lo > 0 || hi < n) {
        if (lo > 0) {
            // pmf(k-1) = pmf(k) * k / (n-k+1) * q / p
            pmf_lo *= static_cast<double>(lo) / static_cast<double>(n - lo + 1) * (q / p);
            --lo;
            u -= pmf_lo;
            if (u <= 0.0) {
                return lo;
            }
        }
        if (hi < n) {
            // pmf(k+1) = pmf(k) * (n-k) / (k+1) * p / q
            pmf_hi *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * (p / q);
            ++hi;
            u -= pmf_hi;
            if (u <= 0.0) {
                return hi;
            }
        }
        if (pmf_lo == 0.0 && pmf_hi == 0.0) {
            break;
        }
    }
    // leftover mass below rounding level
    return mode;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t sample_binomial(std::uint64_t shots, double p, std::mt19937_64 &rng) {
    if (p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return shots;
    }
    if (shots <= kBernoulliShotLimit) {
        std::uint64_t hits = 0;
        for (std::uint64_t s = 0; s < shots; ++s) {
            hits += uniform01(rng) < p ? 1 : 0;
        }
        return hits;
    }
    return binomial_by_inversion(shots, p, rng);
}

double sample_ratio(double p, const ShotPlan &plan) {
    if (plan.shots == 0) {
        throw std::invalid_argument("sample_ratio: shots must be >= 1");
    }
    const double prob = checked_probability(p);
    std::mt19937_64 rng(plan.seed);
    return static_cast<double>(sample_binomial(plan.shots, prob, rng)) /
           static_cast<double>(plan.shots);
}

ResponseCurve sample_curve(const ResponseCurve &curve, const ShotPlan &plan) {
    ResponseCurve out = curve;
    const auto n = static_cast<std::ptrdiff_t>(curve.probs.size());
    // validate before entering the parallel region so nothing throws inside it
    if (plan.shots == 0) {
        throw std::invalid_argument("sample_curve: shots must be >= 1");
    }
    for (const double p : curve.probs) {
        checked_probability(p);
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out.probs[u] = sample_ratio(curve.probs[u],
                                    ShotPlan{plan.shots, derive_seed(plan.seed, u)});
    }
    return out;
}

namespace serial {

ResponseCurve sample_curve(const ResponseCurve &curve, const ShotPlan &plan) {
    ResponseCurve out = curve;
    for (std::size_t i = 0; i < curve.probs.size(); ++i) {
        out.probs[i] =
            sample_ratio(curve.probs[i], ShotPlan{plan.shots, derive_seed(plan.seed, i)});
    }
    return out;
}

} // namespace serial

} // namespace binphase
