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
 * @file algebra.hpp
 * Two-mode (dual-rail) photon states and the 2x2 unitaries the
 * interferometer is built from: phase shift, beam splitter, the W block,
 * the full interferometer U and its reduced form.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>

namespace binphase {

using Complex = std::complex<double>;

/// Single tolerance used for every exact-algebra comparison.
inline constexpr double kExactTol = 1e-12;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an arbitrary finite angle into [0, 2pi).
double canonical_phase(double radians);

/**
 * Photon amplitude over the two modes. |amp0|^2 + |amp1|^2 = 1.
 */
class PhotonState {
  public:
    /// The photon injected in mode 0.
    PhotonState() = default;
    PhotonState(Complex amp0, Complex amp1);

    static PhotonState mode0() { return {}; }
    static PhotonState mode1() { return {Complex{0.0}, Complex{1.0}}; }

    [[nodiscard]] Complex amp0() const { return amp_[0]; }
    [[nodiscard]] Complex amp1() const { return amp_[1]; }
    [[nodiscard]] double norm_squared() const;

    /// Probability of detecting the photon in mode 0 (Born rule).
    [[nodiscard]] double prob0() const { return std::norm(amp_[0]); }

  private:
    std::array<Complex, 2> amp_{Complex{1.0}, Complex{0.0}};
};

/**
 * 2x2 unitary matrix. Instances are only produced by the factories below
 * and by compose(), so U^dagger U = 1 holds by construction.
 */
class Unitary2 {
  public:
    /// Identity.
    Unitary2() = default;

    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }

    [[nodiscard]] Unitary2 adjoint() const;

    /// Largest entrywise deviation of U^dagger U from the identity.
    [[nodiscard]] double unitarity_defect() const;

    /// Largest entrywise |this - other|.
    [[nodiscard]] double distance(const Unitary2 &other) const;

    friend Unitary2 compose(const Unitary2 &a, const Unitary2 &b);
    friend Unitary2 phase_shift(double phi);
    friend Unitary2 hadamard();

  private:
    Unitary2(Complex m00, Complex m01, Complex m10, Complex m11)
        : m_{m00, m01, m10, m11} {}

    std::array<Complex, 4> m_{Complex{1.0}, Complex{0.0}, Complex{0.0},
                              Complex{1.0}};
};

/// P(phi) = diag(1, e^{i phi}); acts on mode 1 only. Throws
/// std::invalid_argument for non-finite phi.
Unitary2 phase_shift(double phi);

/// 50:50 beam splitter, (1/sqrt 2) [[1, 1], [1, -1]].
Unitary2 hadamard();

/// Matrix product a * b (b acts first).
Unitary2 compose(const Unitary2 &a, const Unitary2 &b);

PhotonState apply(const Unitary2 &u, const PhotonState &s);

/// L(theta) = H P(theta) H.
Unitary2 mixer_block(double theta);

/// W(k phi, theta) = P(k phi) H P(theta) H P(k phi).
Unitary2 w_block(double kphi, double theta);

/**
 * Full interferometer for the given multiplied phase k*phi and parameter
 * list theta_1..theta_D:
 *
 *     U = H W(kphi, theta_1) W(kphi, theta_2) ... W(kphi, theta_D)
 *
 * As a matrix product, so the photon meets W(theta_D) first and
 * W(theta_1) last, right before the closing beam splitter.
 * Throws std::invalid_argument on an empty theta list.
 */
Unitary2 interferometer_unitary(double kphi, std::span<const double> thetas);

/**
 * Reduced unitary L(theta_1) P(2 kphi) L(theta_2) ... P(2 kphi) L(theta_D),
 * satisfying U|0> = H P(kphi) Ured |0>.
 */
Unitary2 reduced_interferometer_unitary(double kphi,
                                        std::span<const double> thetas);

} // namespace binphase
