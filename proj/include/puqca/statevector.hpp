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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "puqca/model.hpp"

namespace puqca {

/// Which layer of a time step runs first.
///   even_first: W0 on tiles {0,1},{2,3},… then W1 on {1,2},…,{n-1,0}.
///   odd_first:  W1 on the odd tiles, then W0 on the even tiles.
enum class LayerOrder { even_first, odd_first };

/// Tiles (left, right) of one brick-wall layer; parity 0 is the even layer.
inline std::vector<std::pair<int, int>> layer_tiles(int n, int parity) {
    std::vector<std::pair<int, int>> tiles;
    tiles.reserve(static_cast<std::size_t>(n / 2));
    for (int i = parity; i < n; i += 2) {
        tiles.emplace_back(i, (i + 1) % n);
    }
    return tiles;
}

template <typename Real = double>
class BasicStateVector {
  public:
    using Complex = std::complex<Real>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    /// The vacuum |0…0⟩ on n sites.
    explicit BasicStateVector(int n) : n_(n), amps_(Amplitudes::Zero(Eigen::Index{1} << n)) {
        check_qubits(n);
        amps_(0) = Complex(1);
    }

    BasicStateVector(int n, Amplitudes amps) : n_(n), amps_(std::move(amps)) {
        check_qubits(n);
        if (amps_.size() != (Eigen::Index{1} << n)) {
            throw std::invalid_argument("amplitude count does not match 2^n");
        }
    }

    int qubits() const { return n_; }
    Eigen::Index dimension() const { return amps_.size(); }
    const Amplitudes &amplitudes() const { return amps_; }
    Amplitudes &amplitudes() { return amps_; }
    const Complex &operator[](Eigen::Index i) const { return amps_(i); }

    Real norm() const { return amps_.norm(); }

  private:
    static void check_qubits(int n) {
        // Dense vectors beyond 2^26 amplitudes are not a supported use.
        if (n <= 0 || n % 2 != 0 || n > 26) {
            throw std::invalid_argument("state vector needs an even qubit count in [2, 26], got " +
                                        std::to_string(n));
        }
    }

    int n_;
    Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Real = double>
BasicStateVector<Real> basis_state(const Configuration &b) {
    BasicStateVector<Real> psi(b.size());
    psi.amplitudes()(0) = 0;
    psi.amplitudes()(static_cast<Eigen::Index>(b.index())) = 1;
    return psi;
}

/// Applies a 4×4 matrix to the tile (left, right) in place. Amplitude groups are ordered
/// |00⟩, |01⟩, |10⟩, |11⟩ with `left` as the first factor.
template <typename Real>
void apply_two_site(BasicStateVector<Real> &psi, const Eigen::Matrix<std::complex<Real>, 4, 4> &u,
                    int left, int right) {
    const int n = psi.qubits();
    if (left < 0 || left >= n || right < 0 || right >= n || left == right) {
        throw std::out_of_range("invalid tile");
    }
    const std::uint64_t ml = site_mask(n, left);
    const std::uint64_t mr = site_mask(n, right);
    auto &a = psi.amplitudes();
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::Matrix<std::complex<Real>, 4, 1> group;
    for (std::uint64_t l = 0; l < dim; ++l) {
        if ((l & (ml | mr)) != 0) {
            continue;
        }
        const Eigen::Index idx[4] = {static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l | mr),
                                     static_cast<Eigen::Index>(l | ml),
                                     static_cast<Eigen::Index>(l | ml | mr)};
        for (int r = 0; r < 4; ++r) {
            group(r) = a(idx[r]);
        }
        group = (u * group).eval();
        for (int r = 0; r < 4; ++r) {
            a(idx[r]) = group(r);
        }
    }
}

/// One application of the transition function (both layers, periodic boundary).
template <typename Real>
BasicStateVector<Real> step(BasicStateVector<Real> psi, const PuqcaRule &rule,
                            LayerOrder order = LayerOrder::even_first) {
    const int n = psi.qubits();
    const auto u0 = gate_matrix<Real>(rule.w0);
    const auto u1 = gate_matrix<Real>(rule.w1);
    auto even = [&] {
        for (auto [l, r] : layer_tiles(n, 0)) apply_two_site(psi, u0, l, r);
    };
    auto odd = [&] {
        for (auto [l, r] : layer_tiles(n, 1)) apply_two_site(psi, u1, l, r);
    };
    if (order == LayerOrder::even_first) {
        even();
        odd();
    } else {
        odd();
        even();
    }
    return psi;
}

template <typename Real = double>
BasicStateVector<Real> evolve(const Configuration &b, const PuqcaRule &rule, int t,
                              LayerOrder order = LayerOrder::even_first) {
    if (t < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    auto psi = basis_state<Real>(b);
    for (int s = 0; s < t; ++s) {
        psi = step(std::move(psi), rule, order);
    }
    return psi;
}

/// Probability of measuring 1 at site p.
template <typename Real>
Real excitation_probability(const BasicStateVector<Real> &psi, int p) {
    const int n = psi.qubits();
    if (p < 0 || p >= n) {
        throw std::out_of_range("site index out of range");
    }
    const std::uint64_t m = site_mask(n, p);
    Real total = 0;
    const auto &a = psi.amplitudes();
    for (Eigen::Index l = 0; l < a.size(); ++l) {
        if (static_cast<std::uint64_t>(l) & m) {
            total += std::norm(a(l));
        }
    }
    return total;
}

/// Per-site excitation probabilities.
template <typename Real>
std::vector<Real> marginal_profile(const BasicStateVector<Real> &psi) {
    const int n = psi.qubits();
    std::vector<Real> profile(static_cast<std::size_t>(n), Real(0));
    const auto &a = psi.amplitudes();
    for (Eigen::Index l = 0; l < a.size(); ++l) {
        const Real w = std::norm(a(l));
        if (w == Real(0)) continue;
        for (int p = 0; p < n; ++p) {
            if (static_cast<std::uint64_t>(l) & site_mask(n, p)) profile[static_cast<std::size_t>(p)] += w;
        }
    }
    return profile;
}

/// T^m: the bit at site k moves to site k - m (mod n), so T|b_0 b_1 …⟩ = |b_1 … b_0⟩.
template <typename Real>
BasicStateVector<Real> translate(const BasicStateVector<Real> &psi, int m) {
    const int n = psi.qubits();
    const int shift = ((m % n) + n) % n;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    typename BasicStateVector<Real>::Amplitudes out(psi.dimension());
    const auto &a = psi.amplitudes();
    for (Eigen::Index l = 0; l < a.size(); ++l) {
        const auto u = static_cast<std::uint64_t>(l);
        // Site k sits at bit position n-1-k; moving to site k-m is a left rotation by m.
        const std::uint64_t rotated = shift == 0 ? u : (((u << shift) | (u >> (n - shift))) & full);
        out(static_cast<Eigen::Index>(rotated)) = a(l);
    }
    return BasicStateVector<Real>(n, std::move(out));
}

}  // namespace puqca
