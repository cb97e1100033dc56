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

#include "puqca/model.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace puqca {

double wrap_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("angle must be finite");
    }
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2π.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

GateParams::GateParams(double theta, double alpha, double gamma, double xi, double phi)
    : theta_(wrap_angle(theta)),
      alpha_(wrap_angle(alpha)),
      gamma_(wrap_angle(gamma)),
      xi_(wrap_angle(xi)),
      phi_(wrap_angle(phi)) {}

Eigen::Matrix2cd SingleParticleBlock::matrix() const {
    Eigen::Matrix2cd m;
    m << a, b, -std::conj(b), std::conj(a);
    return m;
}

FermionRule::FermionRule(double theta1, double xi1, double gamma1, double theta2, double xi2,
                         double gamma2)
    : theta1_(wrap_angle(theta1)),
      xi1_(wrap_angle(xi1)),
      gamma1_(wrap_angle(gamma1)),
      theta2_(wrap_angle(theta2)),
      xi2_(wrap_angle(xi2)),
      gamma2_(wrap_angle(gamma2)) {}

SingleParticleBlock FermionRule::block(int j) const {
    if (j == 1) {
        return {std::cos(theta1_) * cis(xi1_), std::sin(theta1_) * cis(gamma1_)};
    }
    if (j == 2) {
        return {std::cos(theta2_) * cis(xi2_), std::sin(theta2_) * cis(gamma2_)};
    }
    throw std::out_of_range("fermion block index must be 1 or 2");
}

namespace {

void check_size(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw std::invalid_argument("lattice size must be a positive even number, got " +
                                    std::to_string(n));
    }
    if (n > kMaxSites) {
        throw std::invalid_argument("lattice size exceeds " + std::to_string(kMaxSites));
    }
}

}  // namespace

Configuration::Configuration(int n, std::uint64_t index) : n_(n), index_(index) {
    check_size(n);
    if (index >> n != 0) {
        throw std::invalid_argument("basis index out of range for lattice size");
    }
}

Configuration::Configuration(std::string_view bits) : n_(static_cast<int>(bits.size())), index_(0) {
    check_size(n_);
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("configuration must contain only '0' and '1'");
        }
        index_ = (index_ << 1) | static_cast<std::uint64_t>(ch == '1');
    }
}

int Configuration::weight() const { return std::popcount(index_); }

std::string Configuration::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int k = 0; k < n_; ++k) {
        if (bit(k)) {
            s[static_cast<std::size_t>(k)] = '1';
        }
    }
    return s;
}

Configuration Configuration::reversed() const {
    std::uint64_t r = 0;
    for (int k = 0; k < n_; ++k) {
        if (bit(k)) {
            r |= site_mask(n_, n_ - 1 - k);
        }
    }
    return {n_, r};
}

Configuration Configuration::translated(int m) const {
    const int shift = ((m % n_) + n_) % n_;
    std::uint64_t r = 0;
    for (int k = 0; k < n_; ++k) {
        if (bit(k)) {
            r |= site_mask(n_, ((k - shift) % n_ + n_) % n_);
        }
    }
    return {n_, r};
}

}  // namespace puqca
