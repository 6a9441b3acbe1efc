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
 * @file response.hpp
 * Exact interferometer response p(phi), its Fourier content, the theta
 * schedules and the ideal square-wave references it is compared to.
 *
 * Grid kernels (sweep, spectrum) are OpenMP-parallel; the serial
 * namespace holds the single-threaded reference versions used by tests and
 * the benchmark.
 */
#pragma once

#include "binphase/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binphase {

/// Everything needed to build one iteration's interferometer.
struct InterferometerConfig {
    unsigned iteration = 0; ///< j; the unknown shift is applied as P(k phi), k = 2^j
    int depth = 1;          ///< D, number of W blocks
    double alpha = kPi / 2.0;
    double beta = 2.0;

    static constexpr unsigned kMaxIteration = 62;

    [[nodiscard]] std::uint64_t k() const { return std::uint64_t{1} << iteration; }

    /// Throws std::invalid_argument when depth < 1, beta <= 0, alpha is
    /// not finite or the iteration overflows k.
    void validate() const;

    [[nodiscard]] std::vector<double> thetas() const;
};

/// theta_i = alpha / (beta i + 1 - beta), i = 1..depth.
std::vector<double> theta_schedule(double alpha, double beta, int depth);

Unitary2 full_unitary(const InterferometerConfig &config, double phi);
Unitary2 reduced_unitary(const InterferometerConfig &config, double phi);

/// Probability that the photon leaves in mode 0, |<0|U|0>|^2.
double response_exact(const InterferometerConfig &config, double phi);

/// Same as response_exact but with a precomputed theta list; phi is
/// already multiplied by k.
double response_from_thetas(double kphi, std::span<const double> thetas);

/// Analytic depth-1 response 1/2 + (1/2) sin(alpha) sin(k phi).
double response_closed_form_d1(double alpha, unsigned iteration, double phi);

struct FourierSpectrum {
    std::uint64_t k = 1;
    int depth = 1;
    std::size_t samples = 0;
    /// c_q for q = -(2D-1) .. 2D-1, stored at index q + 2D - 1.
    std::vector<Complex> coeffs;
    /// Largest |c_q| found outside the band.
    double residual = 0.0;

    [[nodiscard]] int max_harmonic() const { return 2 * depth - 1; }
    [[nodiscard]] Complex coeff(int q) const;
    /// sum_q c_q e^{i k q phi}, real part.
    [[nodiscard]] double evaluate(double phi) const;
};

/// Default sample count, max(4(2D-1)+1, 256).
std::size_t default_spectrum_samples(int depth);

/// Discrete Fourier analysis of p over one period [0, 2pi/k).
/// Throws std::invalid_argument if samples < 4D.
FourierSpectrum fourier_spectrum(const InterferometerConfig &config,
                                 std::size_t samples);
FourierSpectrum fourier_spectrum(const InterferometerConfig &config);

/// Ideal binary response: 1 on the first half of each period 2pi/k.
int square_wave(unsigned iteration, double phi);

struct Extrema {
    double min = 0.0;
    double max = 0.0;
};

/// Exact extrema over a period of 1/2 + sum_{q odd <= 2D-1} 2/(pi q) sin(q x).
Extrema truncated_square_extrema(int depth);

/// Partial Fourier sum of the square wave up to harmonic 2D-1. With
/// renormalize set, mapped affinely so its global extrema become 0 and 1.
double square_wave_truncated(unsigned iteration, int depth, double phi,
                             bool renormalize);

struct ResponseCurve {
    std::vector<double> phis;
    std::vector<double> probs;
    InterferometerConfig config;
};

/// n evenly spaced phases in [0, 2pi), endpoint excluded.
std::vector<double> phase_grid(std::size_t points);

/// Exact response on an evenly spaced grid. Throws for grid_points < 2.
ResponseCurve sweep(const InterferometerConfig &config, std::size_t grid_points);

/// Extrema of the response over one period: grid search followed by Brent
/// refinement around the best grid points.
Extrema response_extrema(const InterferometerConfig &config,
                         std::size_t grid_points = 512);

/// (x - min) / (max - min) using the extrema of the values themselves.
std::vector<double> renormalize_to_unit(std::span<const double> values);

/// Mean |p - f| over a grid, skipping points closer than guard * (pi/k)
/// to a discontinuity of f.
double guarded_square_deviation(const InterferometerConfig &config,
                                std::size_t grid_points, double guard);

/// Sum of |p_{i+1} - p_i| over the periodic grid.
double total_variation(std::span<const double> values);

namespace serial {
ResponseCurve sweep(const InterferometerConfig &config, std::size_t grid_points);
FourierSpectrum fourier_spectrum(const InterferometerConfig &config,
                                 std::size_t samples);
} // namespace serial

} // namespace binphase
