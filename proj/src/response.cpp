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

#include "binphase/response.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace binphase {

namespace {

double multiplied_phase(std::uint64_t k, double phi) {
    return canonical_phase(static_cast<double>(k) * phi);
}

double truncated_square_raw(int depth, double x) {
    double s = 0.5;
    for (int q = 1; q <= 2 * depth - 1; q += 2) {
        s += 2.0 / (kPi * q) * std::sin(q * x);
    }
    return s;
}

Complex dft_coefficient(std::span<const double> x, std::ptrdiff_t q) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    Complex acc{0.0};
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        const double ang = -kTwoPi * static_cast<double>((q * s) % n) /
                           static_cast<double>(n);
        acc += x[static_cast<std::size_t>(s)] * std::polar(1.0, ang);
    }
    return acc / static_cast<double>(n);
}

FourierSpectrum assemble_spectrum(const InterferometerConfig &config,
                                  std::size_t samples,
                                  const std::vector<Complex> &all) {
    FourierSpectrum out;
    out.k = config.k();
    out.depth = config.depth;
    out.samples = samples;
    const int band = out.max_harmonic();
    out.coeffs.assign(static_cast<std::size_t>(2 * band + 1), Complex{0.0});
    const auto n = static_cast<std::ptrdiff_t>(samples);
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        // index -> signed harmonic
        const std::ptrdiff_t q = idx <= n / 2 ? idx : idx - n;
        const Complex c = all[static_cast<std::size_t>(idx)];
        if (std::abs(q) <= band) {
            out.coeffs[static_cast<std::size_t>(q + band)] = c;
        } else {
            out.residual = std::max(out.residual, std::abs(c));
        }
    }
    return out;
}

std::vector<double> period_samples(const InterferometerConfig &config,
                                   std::size_t samples) {
    config.validate();
    if (samples < static_cast<std::size_t>(4 * config.depth)) {
        throw std::invalid_argument("fourier_spectrum: need at least 4*depth samples, got " +
                                    std::to_string(samples));
    }
    const auto thetas = config.thetas();
    std::vector<double> x(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        x[s] = response_from_thetas(kTwoPi * static_cast<double>(s) /
                                        static_cast<double>(samples),
                                    thetas);
    }
    return x;
}

void check_grid(std::size_t grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("sweep: grid needs at least 2 points");
    }
}

} // namespace

void InterferometerConfig::validate() const {
    if (depth < 1) {
        throw std::invalid_argument("depth must be >= 1, got " + std::to_string(depth));
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite and > 0");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite");
    }
    if (iteration > kMaxIteration) {
        throw std::invalid_argument("iteration index too large for k = 2^j");
    }
}

std::vector<double> InterferometerConfig::thetas() const {
    return theta_schedule(alpha, beta, depth);
}

std::vector<double> theta_schedule(double alpha, double beta, int depth) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::invalid_argument("theta_schedule: beta must be > 0");
    }
    if (depth < 1) {
        throw std::invalid_argument("theta_schedule: depth must be >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(depth));
    for (int i = 1; i <= depth; ++i) {
        out[static_cast<std::size_t>(i - 1)] = alpha / (beta * i + 1.0 - beta);
    }
    return out;
}

Unitary2 full_unitary(const InterferometerConfig &config, double phi) {
    config.validate();
    const auto thetas = config.thetas();
    return interferometer_unitary(multiplied_phase(config.k(), phi), thetas);
}

Unitary2 reduced_unitary(const InterferometerConfig &config, double phi) {
    config.validate();
    const auto thetas = config.thetas();
    return reduced_interferometer_unitary(multiplied_phase(config.k(), phi), thetas);
}

double response_from_thetas(double kphi, std::span<const double> thetas) {
    const Unitary2 u = interferometer_unitary(kphi, thetas);
    return std::clamp(std::norm(u(0, 0)), 0.0, 1.0);
}

double response_exact(const InterferometerConfig &config, double phi) {
    config.validate();
    const auto thetas = config.thetas();
    return response_from_thetas(multiplied_phase(config.k(), phi), thetas);
}

double response_closed_form_d1(double alpha, unsigned iteration, double phi) {
    const double kphi = multiplied_phase(std::uint64_t{1} << iteration, phi);
    return 0.5 + 0.5 * std::sin(alpha) * std::sin(kphi);
}

Complex FourierSpectrum::coeff(int q) const {
    const int band = max_harmonic();
    if (q < -band || q > band) {
        return Complex{0.0};
    }
    return coeffs[static_cast<std::size_t>(q + band)];
}

double FourierSpectrum::evaluate(double phi) const {
    const double kphi = multiplied_phase(k, phi);
    const int band = max_harmonic();
    Complex acc{0.0};
    for (int q = -band; q <= band; ++q) {
        acc += coeff(q) * std::polar(1.0, q * kphi);
    }
    return acc.real();
}

std::size_t default_spectrum_samples(int depth) {
    return std::max<std::size_t>(static_cast<std::size_t>(4 * (2 * depth - 1) + 1), 256);
}

FourierSpectrum fourier_spectrum(const InterferometerConfig &config,
                                 std::size_t samples) {
    const auto x = period_samples(config, samples);
    const auto n = static_cast<std::ptrdiff_t>(samples);
    std::vector<Complex> all(samples);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        all[static_cast<std::size_t>(idx)] = dft_coefficient(x, idx);
    }
    return assemble_spectrum(config, samples, all);
}

FourierSpectrum fourier_spectrum(const InterferometerConfig &config) {
    return fourier_spectrum(config, default_spectrum_samples(config.depth));
}

int square_wave(unsigned iteration, double phi) {
    const double kphi = multiplied_phase(std::uint64_t{1} << iteration, phi);
    return kphi < kPi ? 1 : 0;
}

Extrema truncated_square_extrema(int depth) {
    if (depth < 1) {
        throw std::invalid_argument("truncated_square_extrema: depth must be >= 1");
    }
    // Derivative is sin(2Dx) / (pi sin x): critical points at m pi / (2D).
    Extrema e{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity()};
    for (int m = 1; m < 4 * depth; ++m) {
        if (m == 2 * depth) {
            continue;
        }
        const double v = truncated_square_raw(depth, m * kPi / (2.0 * depth));
        e.min = std::min(e.min, v);
        e.max = std::max(e.max, v);
    }
    return e;
}

double square_wave_truncated(unsigned iteration, int depth, double phi,
                             bool renormalize) {
    if (depth < 1) {
        throw std::invalid_argument("square_wave_truncated: depth must be >= 1");
    }
    const double v =
        truncated_square_raw(depth, multiplied_phase(std::uint64_t{1} << iteration, phi));
    if (!renormalize) {
        return v;
    }
    const Extrema e = truncated_square_extrema(depth);
    return (v - e.min) / (e.max - e.min);
}

std::vector<double> phase_grid(std::size_t points) {
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        out[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(points);
    }
    return out;
}

ResponseCurve sweep(const InterferometerConfig &config, std::size_t grid_points) {
    check_grid(grid_points);
    config.validate();
    const auto thetas = config.thetas();
    ResponseCurve curve{phase_grid(grid_points), std::vector<double>(grid_points), config};
    const auto n = static_cast<std::ptrdiff_t>(grid_points);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        curve.probs[u] =
            response_from_thetas(multiplied_phase(config.k(), curve.phis[u]), thetas);
    }
    return curve;
}

Extrema response_extrema(const InterferometerConfig &config, std::size_t grid_points) {
    check_grid(grid_points);
    config.validate();
    const auto thetas = config.thetas();
    const double step = kTwoPi / static_cast<double>(grid_points);
    std::size_t imin = 0;
    std::size_t imax = 0;
    std::vector<double> v(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        v[i] = response_from_thetas(step * static_cast<double>(i), thetas);
        if (v[i] < v[imin]) {
            imin = i;
        }
        if (v[i] > v[imax]) {
            imax = i;
        }
    }
    constexpr int bits = std::numeric_limits<double>::digits / 2;
    const auto refine = [&](std::size_t i, double sign) {
        const double centre = step * static_cast<double>(i);
        auto f = [&](double x) { return sign * response_from_thetas(x, thetas); };
        const auto [x, fx] =
            boost::math::tools::brent_find_minima(f, centre - step, centre + step, bits);
        (void)x;
        return std::min(sign * v[i], fx) * sign;
    };
    return {refine(imin, 1.0), refine(imax, -1.0)};
}

std::vector<double> renormalize_to_unit(std::span<const double> values) {
    if (values.empty()) {
        return {};
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double span = *hi - *lo;
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = span > 0.0 ? (values[i] - *lo) / span : 0.0;
    }
    return out;
}

double guarded_square_deviation(const InterferometerConfig &config,
                                std::size_t grid_points, double guard) {
    const ResponseCurve curve = sweep(config, grid_points);
    const double half_period = kPi / static_cast<double>(config.k());
    double sum = 0.0;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        // distance, in phi, to the nearest multiple of the half-period
        const double r = std::fmod(curve.phis[i], half_period);
        if (std::min(r, half_period - r) < guard * half_period) {
            continue;
        }
        sum += std::abs(curve.probs[i] - square_wave(config.iteration, curve.phis[i]));
        ++kept;
    }
    if (kept == 0) {
        throw std::invalid_argument("guard band excludes every grid point");
    }
    return sum / static_cast<double>(kept);
}

double total_variation(std::span<const double> values) {
    double tv = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        tv += std::abs(values[(i + 1) % values.size()] - values[i]);
    }
    return tv;
}

namespace serial {

ResponseCurve sweep(const InterferometerConfig &config, std::size_t grid_points) {
    check_grid(grid_points);
    config.validate();
    ResponseCurve curve{phase_grid(grid_points), {}, config};
    curve.probs.reserve(grid_points);
    for (const double phi : curve.phis) {
        curve.probs.push_back(response_exact(config, phi));
    }
    return curve;
}

FourierSpectrum fourier_spectrum(const InterferometerConfig &config,
                                 std::size_t samples) {
    const auto x = period_samples(config, samples);
    std::vector<Complex> all;
    all.reserve(samples);
    for (std::size_t idx = 0; idx < samples; ++idx) {
        all.push_back(dft_coefficient(x, static_cast<std::ptrdiff_t>(idx)));
    }
    return assemble_spectrum(config, samples, all);
}

} // namespace serial

} // namespace binphase
