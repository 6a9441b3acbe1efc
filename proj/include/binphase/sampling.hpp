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

/**
 * @file sampling.hpp
 * Shot noise: turning an exact detection probability into the fraction of
 * photons counted in mode 0 over a finite number of shots.
 *
 * There is no global generator. Every draw sequence comes from an explicit
 * (seed, index) pair: the pair is mixed with SplitMix64 and the result seeds
 * a std::mt19937_64 stream, whose output sequence is fixed by the standard.
 * Uniform variates are built from the top 53 bits directly rather than
 * through std::uniform_real_distribution, whose algorithm is not portable.
 */
#pragma once

#include "binphase/response.hpp"

#include <cstdint>
#include <random>

namespace binphase {

struct ShotPlan {
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
};

/// Above this many shots, binomial counts are drawn by inversion instead of
/// one Bernoulli trial per shot.
inline constexpr std::uint64_t kBernoulliShotLimit = 10'000;

/// SplitMix64 finalizer applied to seed + golden-ratio * (index + 1).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64 &rng);

/// Exact Binomial(shots, p) draw.
std::uint64_t sample_binomial(std::uint64_t shots, double p, std::mt19937_64 &rng);

/// k / shots with k ~ Binomial(shots, p). p may exceed [0, 1] by at most
/// 1e-9 (it is clamped); further out, or shots == 0, throws
/// std::invalid_argument.
double sample_ratio(double p, const ShotPlan &plan);

/// Pointwise sample_ratio; point i uses seed derive_seed(plan.seed, i).
ResponseCurve sample_curve(const ResponseCurve &curve, const ShotPlan &plan);

namespace serial {
ResponseCurve sample_curve(const ResponseCurve &curve, const ShotPlan &plan);
} // namespace serial

} // namespace binphase
