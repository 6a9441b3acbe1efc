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

#include "binphase/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace binphase {

double canonical_phase(double radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("phase must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to exactly 2pi
    return r >= kTwoPi ? 0.0 : r;
}

PhotonState::PhotonState(Complex amp0, Complex amp1) : amp_{amp0, amp1} {
    const double n = std::norm(amp0) + std::norm(amp1);
    if (!std::isfinite(n) || n == 0.0) {
        throw std::invalid_argument("photon state must have finite, nonzero norm");
    }
    const double s = 1.0 / std::sqrt(n);
    amp_[0] *= s;
    amp_[1] *= s;
}

double PhotonState::norm_squared() const {
    return std::norm(amp_[0]) + std::norm(amp_[1]);
}

Unitary2 Unitary2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
            std::conj(m_[3])};
}

double Unitary2::unitarity_defect() const {
    const Unitary2 g = compose(adjoint(), *this);
    return g.distance(Unitary2{});
}

double Unitary2::distance(const Unitary2 &other) const {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(m_[i] - other.m_[i]));
    }
    return d;
}

Unitary2 phase_shift(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_shift: non-finite phase");
    }
    return {Complex{1.0}, Complex{0.0}, Complex{0.0}, std::polar(1.0, phi)};
}

Unitary2 hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {Complex{s}, Complex{s}, Complex{s}, Complex{-s}};
}

Unitary2 compose(const Unitary2 &a, const Unitary2 &b) {
    const auto &x = a.m_;
    const auto &y = b.m_;
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

PhotonState apply(const Unitary2 &u, const PhotonState &s) {
    // Unitary action keeps the norm; the constructor renormalizes away
    // accumulated rounding.
    return {u(0, 0) * s.amp0() + u(0, 1) * s.amp1(),
            u(1, 0) * s.amp0() + u(1, 1) * s.amp1()};
}

Unitary2 mixer_block(double theta) {
    const Unitary2 h = hadamard();
    return compose(h, compose(phase_shift(theta), h));
}

Unitary2 w_block(double kphi, double theta) {
    const Unitary2 p = phase_shift(kphi);
    const Unitary2 h = hadamard();
    return compose(p, compose(h, compose(phase_shift(theta), compose(h, p))));
}

Unitary2 interferometer_unitary(double kphi, std::span<const double> thetas) {
    if (thetas.empty()) {
        throw std::invalid_argument("interferometer needs depth >= 1");
    }
    Unitary2 acc = hadamard();
    for (const double theta : thetas) {
        acc = compose(acc, w_block(kphi, theta));
    }
    return acc;
}

Unitary2 reduced_interferometer_unitary(double kphi,
                                        std::span<const double> thetas) {
    if (thetas.empty()) {
        throw std::invalid_argument("interferometer needs depth >= 1");
    }
    const Unitary2 p2 = phase_shift(2.0 * kphi);
    Unitary2 acc = mixer_block(thetas.front());
    for (std::size_t i = 1; i < thetas.size(); ++i) {
        acc = compose(acc, compose(p2, mixer_block(thetas[i])));
    }
    return acc;
}

} // namespace binphase
