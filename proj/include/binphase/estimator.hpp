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
 * @file estimator.hpp
 * Bit-by-bit binary search for an unknown phase.
 *
 * Iteration j probes the phase with an interferometer whose response
 * approximates a square wave of period 2pi/2^j; the thresholded photon ratio
 * is one bit of the binary expansion of phi/2pi (complemented). n bits place
 * phi in one of 2^n equal intervals of [0, 2pi), and the estimate is that
 * interval's midpoint.
 */
#pragma once

#include "binphase/response.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace binphase {

enum class RequestMode {
    sequential, ///< measure, threshold, then issue the next request
    parallel,   ///< issue all n requests before decoding any of them
};

struct EstimationSpec {
    double epsilon = kPi / 64.0;
    int depth = 16;
    double alpha = kPi / 2.0;
    double beta = 2.0;
    std::uint64_t shots_per_iteration = 0; ///< 0 means exact probabilities
    std::uint64_t seed = 0;
    RequestMode mode = RequestMode::sequential;
};

/// What the estimator asks a phase source for at iteration j.
struct MeasurementRequest {
    unsigned iteration = 0;
    int depth = 1;
    double alpha = kPi / 2.0;
    double beta = 2.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] InterferometerConfig config() const {
        return {iteration, depth, alpha, beta};
    }
};

/**
 * Supplies measured mode-0 ratios without exposing the hidden phase.
 * measure() must be safe to call concurrently and give the same
 * distribution for the same request.
 */
class PhaseSource {
  public:
    virtual ~PhaseSource() = default;
    [[nodiscard]] virtual double measure(const MeasurementRequest &request) const = 0;
};

/// Simulated interferometer around a fixed hidden phase. With shots > 0 the
/// ratio is sampled using seed derive_seed(request.seed, request.iteration).
class SimulatedSource final : public PhaseSource {
  public:
    explicit SimulatedSource(double hidden_phase);
    [[nodiscard]] double measure(const MeasurementRequest &request) const override;

  private:
    double phase_;
};

class MeasurementUnavailable : public std::runtime_error {
  public:
    MeasurementUnavailable(unsigned iteration, const std::string &why);
    [[nodiscard]] unsigned iteration() const { return iteration_; }

  private:
    unsigned iteration_;
};

struct EstimationResult {
    std::vector<std::uint8_t> bits; ///< bits[j] from iteration j
    std::uint64_t m_tilde = 0;
    double phi_hat = 0.0;
    double half_width = 0.0;
    unsigned n = 0;
    std::uint64_t resources = 0;
    std::uint64_t shots_total = 0;
};

struct PhaseEstimate {
    double phi_hat = 0.0;
    double half_width = 0.0;
};

/// Iteration cap; beyond it the intervals drop below double resolution.
inline constexpr unsigned kMaxIterations = 52;

/// Largest n with pi/2^n >= epsilon, at least 1. Throws
/// std::invalid_argument unless 0 < epsilon < pi, or if n > kMaxIterations.
unsigned iterations_for(double epsilon);

/// 1 iff p_hat >= 1/2.
std::uint8_t measure_bit(double p_hat);

/// Complement, reverse, read with element 0 as least significant.
/// Throws std::invalid_argument on an empty list or more than 63 bits.
std::uint64_t bits_to_index(std::span<const std::uint8_t> bits);

/// Midpoint and half-width of interval m of the 2^n-fold partition.
PhaseEstimate estimate_from_index(std::uint64_t m_tilde, unsigned n);

/// 2 D (2^n - 1): unknown-phase applications summed over all iterations.
std::uint64_t resource_count(int depth, unsigned n);

/// True when phi lies inside the band of total width guard * (2pi/2^n)
/// centred on a boundary of the 2^n-fold partition.
bool in_guard_band(double phi, unsigned n, double guard);

/// Runs the full search. Source failures surface as MeasurementUnavailable
/// naming the iteration.
EstimationResult run(const EstimationSpec &spec, const PhaseSource &source);

} // namespace binphase
