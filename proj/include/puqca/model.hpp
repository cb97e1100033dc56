// Copyright 2026 The puqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace puqca {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest lattice supported by Configuration (bits are packed into a 64-bit word).
inline constexpr int kMaxSites = 62;

/// e^{i·angle}.
template <typename Real>
std::complex<Real> cis(Real angle) {
    return {std::cos(angle), std::sin(angle)};
}

/// Wraps a finite angle into [0, 2π). Throws std::invalid_argument for NaN/inf.
double wrap_angle(double angle);

/// Angles of one number-conserving two-qubit gate. All angles are canonical in [0, 2π).
class GateParams {
  public:
    GateParams() = default;
    GateParams(double theta, double alpha, double gamma, double xi, double phi = 0.0);

    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    double gamma() const { return gamma_; }
    double xi() const { return xi_; }
    double phi() const { return phi_; }

    bool operator==(const GateParams &) const = default;

  private:
    double theta_ = 0.0;
    double alpha_ = 0.0;
    double gamma_ = 0.0;
    double xi_ = 0.0;
    double phi_ = 0.0;
};

/// One time step: W0 on the even tiles, then W1 on the odd tiles.
struct PuqcaRule {
    GateParams w0;
    GateParams w1;

    static PuqcaRule identity() { return {}; }
    bool operator==(const PuqcaRule &) const = default;
};

/// Single-particle block entries (a, b) of the matrix [[a, b], [-b*, a*]].
struct SingleParticleBlock {
    std::complex<double> a{1.0, 0.0};
    std::complex<double> b{0.0, 0.0};

    Eigen::Matrix2cd matrix() const;
};

/// Six-angle rule of the free-fermion regime: a_j = e^{iξ_j} cos θ_j, b_j = e^{iγ_j} sin θ_j.
class FermionRule {
  public:
    FermionRule() = default;
    FermionRule(double theta1, double xi1, double gamma1, double theta2, double xi2, double gamma2);

    double theta1() const { return theta1_; }
    double xi1() const { return xi1_; }
    double gamma1() const { return gamma1_; }
    double theta2() const { return theta2_; }
    double xi2() const { return xi2_; }
    double gamma2() const { return gamma2_; }

    /// Block of the even layer (j = 1) or odd layer (j = 2).
    SingleParticleBlock block(int j) const;

    bool operator==(const FermionRule &) const = default;

  private:
    double theta1_ = 0.0;
    double xi1_ = 0.0;
    double gamma1_ = 0.0;
    double theta2_ = 0.0;
    double xi2_ = 0.0;
    double gamma2_ = 0.0;
};

/// Classical lattice state b_0 … b_{n-1}. Site 0 is the most significant bit of index().
class Configuration {
  public:
    /// Builds from the basis index ℓ = Σ_k b_k 2^{n-1-k}. n must be even and ≤ kMaxSites.
    Configuration(int n, std::uint64_t index);
    /// Parses a string of '0'/'1' characters.
    explicit Configuration(std::string_view bits);

    int size() const { return n_; }
    std::uint64_t index() const { return index_; }
    bool bit(int site) const { return (index_ >> (n_ - 1 - site)) & 1U; }
    int weight() const;
    std::string to_string() const;

    /// Site order reversed (b_{n-1} … b_0).
    Configuration reversed() const;
    /// Cyclic translation T^m: the bit at site k moves to site k - m (mod n).
    Configuration translated(int m) const;

    bool operator==(const Configuration &) const = default;

  private:
    int n_;
    std::uint64_t index_;
};

/// Bit mask of `site` inside a basis index for an n-site lattice.
inline std::uint64_t site_mask(int n, int site) { return std::uint64_t{1} << (n - 1 - site); }

/// Matrix of the gate in basis order (|00⟩, |01⟩, |10⟩, |11⟩); the left factor is the lower
/// lattice index of the tile.
template <typename Real = double>
Eigen::Matrix<std::complex<Real>, 4, 4> gate_matrix(const GateParams &g) {
    using C = std::complex<Real>;
    const Real theta = static_cast<Real>(g.theta());
    const Real alpha = static_cast<Real>(g.alpha());
    const Real gamma = static_cast<Real>(g.gamma());
    const Real xi = static_cast<Real>(g.xi());
    const Real phi = static_cast<Real>(g.phi());
    const Real c = std::cos(theta);
    const Real s = std::sin(theta);

    Eigen::Matrix<C, 4, 4> u = Eigen::Matrix<C, 4, 4>::Zero();
    u(0, 0) = C(1);
    u(1, 1) = c * cis(xi);
    u(1, 2) = s * cis(gamma);
    u(2, 1) = -s * cis(alpha - gamma);
    u(2, 2) = c * cis(alpha - xi);
    u(3, 3) = cis(phi);
    return u;
}

}  // namespace puqca
