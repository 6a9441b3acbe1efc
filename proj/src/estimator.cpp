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

#include "binphase/estimator.hpp"

#include "binphase/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>

namespace binphase {

namespace {

MeasurementRequest request_for(const EstimationSpec &spec, unsigned j) {
    return {j, spec.depth, spec.alpha, spec.beta, spec.shots_per_iteration, spec.seed};
}

double checked_measure(const PhaseSource &source, const MeasurementRequest &req) {
    double p = 0.0;
    try {
        p = source.measure(req);
    } catch (const MeasurementUnavailable &) {
        throw;
    } catch (const std::exception &e) {
        throw MeasurementUnavailable(req.iteration, e.what());
    } catch (...) {
        throw MeasurementUnavailable(req.iteration, "unknown source failure");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw MeasurementUnavailable(req.iteration, "ratio outside [0, 1]");
    }
    return p;
}

void validate_spec(const EstimationSpec &spec) {
    InterferometerConfig{0, spec.depth, spec.alpha, spec.beta}.validate();
}

} // namespace

SimulatedSource::SimulatedSource(double hidden_phase)
    : phase_(canonical_phase(hidden_phase)) {}

double SimulatedSource::measure(const MeasurementRequest &request) const {
    const double p = response_exact(request.config(), phase_);
    if (request.shots == 0) {
        return p;
    }
    return sample_ratio(p, ShotPlan{request.shots, derive_seed(request.seed, request.iteration)});
}

MeasurementUnavailable::MeasurementUnavailable(unsigned iteration, const std::string &why)
    : std::runtime_error("measurement unavailable at iteration " + std::to_string(iteration) +
                         ": " + why),
      iteration_(iteration) {}

unsigned iterations_for(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < kPi)) {
        throw std::invalid_argument("epsilon must lie in (0, pi)");
    }
    // Exactly the loop guard "pi / 2^j >= 2 epsilon"; ldexp keeps pi/2^n exact.
    unsigned n = 0;
    while (std::ldexp(kPi, -static_cast<int>(n) - 1) >= epsilon) {
        ++n;
        if (n > kMaxIterations) {
            throw std::invalid_argument("epsilon below double-precision resolution");
        }
    }
    return std::max(n, 1U);
}

std::uint8_t measure_bit(double p_hat) { return p_hat >= 0.5 ? 1 : 0; }

std::uint64_t bits_to_index(std::span<const std::uint8_t> bits) {
    if (bits.empty()) {
        throw std::invalid_argument("bits_to_index: empty bit list");
    }
    if (bits.size() > 63) {
        throw std::invalid_argument("bits_to_index: too many bits");
    }
    std::vector<std::uint8_t> b(bits.begin(), bits.end());
    for (auto &bit : b) {
        bit = bit ? 0 : 1;
    }
    std::reverse(b.begin(), b.end());
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        m |= static_cast<std::uint64_t>(b[i]) << i;
    }
    return m;
}

PhaseEstimate estimate_from_index(std::uint64_t m_tilde, unsigned n) {
    if (n == 0 || n > kMaxIterations) {
        throw std::invalid_argument("estimate_from_index: n out of range");
    }
    if (m_tilde >= (std::uint64_t{1} << n)) {
        throw std::invalid_argument("estimate_from_index: index >= 2^n");
    }
    const double half = std::ldexp(kPi, -static_cast<int>(n));
    return {static_cast<double>(2 * m_tilde + 1) * half, half};
}

std::uint64_t resource_count(int depth, unsigned n) {
    if (depth < 1 || n == 0 || n > kMaxIterations) {
        throw std::invalid_argument("resource_count: need depth >= 1 and 1 <= n <= 52");
    }
    return 2 * static_cast<std::uint64_t>(depth) * ((std::uint64_t{1} << n) - 1);
}

bool in_guard_band(double phi, unsigned n, double guard) {
    if (n == 0 || n > kMaxIterations) {
        throw std::invalid_argument("in_guard_band: n out of range");
    }
    const double width = std::ldexp(kTwoPi, -static_cast<int>(n));
    const double r = std::fmod(canonical_phase(phi), width);
    return std::min(r, width - r) < 0.5 * guard * width;
}

EstimationResult run(const EstimationSpec &spec, const PhaseSource &source) {
    validate_spec(spec);
    EstimationResult r;
    r.n = iterations_for(spec.epsilon);
    r.bits.resize(r.n);

    if (spec.mode == RequestMode::sequential) {
        for (unsigned j = 0; j < r.n; ++j) {
            r.bits[j] = measure_bit(checked_measure(source, request_for(spec, j)));
        }
    } else {
        std::vector<double> ratios(r.n);
        std::vector<std::optional<MeasurementUnavailable>> failures(r.n);
        const auto n = static_cast<std::ptrdiff_t>(r.n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            const auto u = static_cast<unsigned>(j);
            try {
                ratios[u] = checked_measure(source, request_for(spec, u));
            } catch (const MeasurementUnavailable &e) {
                failures[u] = e;
            }
        }
        // report the lowest failing iteration regardless of completion order
        for (const auto &f : failures) {
            if (f) {
                throw *f;
            }
        }
        for (unsigned j = 0; j < r.n; ++j) {
            r.bits[j] = measure_bit(ratios[j]);
        }
    }

    r.m_tilde = bits_to_index(r.bits);
    const PhaseEstimate est = estimate_from_index(r.m_tilde, r.n);
    r.phi_hat = est.phi_hat;
    r.half_width = est.half_width;
    r.resources = resource_count(spec.depth, r.n);
    r.shots_total = spec.shots_per_iteration * r.n;
    return r;
}

} // namespace binphase
