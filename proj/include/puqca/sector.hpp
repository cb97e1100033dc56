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
#include <memory>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "puqca/model.hpp"
#include "puqca/statevector.hpp"

namespace puqca {

/// Index tables for the weight-k sector of an n-site lattice. States are stored in
/// lexicographic (ascending index) order.
class SectorBasis {
  public:
    /// Amplitude slots touched by the tile (left, left + 1 mod n).
    struct TileTable {
        std::vector<std::uint32_t> lo;    // tile reads |01⟩
        std::vector<std::uint32_t> hi;    // partner of lo[i] reading |10⟩
        std::vector<std::uint32_t> both;  // tile reads |11⟩
        std::vector<std::uint32_t> none;  // tile reads |00⟩
    };

    SectorBasis(int n, int k);

    int sites() const { return n_; }
    int weight() const { return k_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<std::uint64_t> &states() const { return states_; }

    /// Position of a basis index inside this sector; throws on weight mismatch.
    std::size_t rank(std::uint64_t index) const;
    const TileTable &tile(int left) const { return tiles_.at(static_cast<std::size_t>(left)); }
    /// Sector positions whose state has site p occupied.
    const std::vector<std::uint32_t> &occupied(int site) const {
        return occupied_.at(static_cast<std::size_t>(site));
    }

  private:
    int n_;
    int k_;
    std::vector<std::uint64_t> states_;
    std::vector<TileTable> tiles_;
    std::vector<std::vector<std::uint32_t>> occupied_;
};

template <typename Real = double>
struct SectorState {
    using Complex = std::complex<Real>;
    std::shared_ptr<const SectorBasis> basis;
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> amplitudes;
};

template <typename Real = double>
SectorState<Real> sector_basis_state(std::shared_ptr<const SectorBasis> basis, const Configuration &b) {
    if (b.size() != basis->sites()) {
        throw std::invalid_argument("configuration size does not match sector");
    }
    SectorState<Real> s{basis, Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>::Zero(
                                   static_cast<Eigen::Index>(basis->size()))};
    s.amplitudes(static_cast<Eigen::Index>(basis->rank(b.index()))) = 1;
    return s;
}

template <typename Real>
void sector_apply_tile(SectorState<Real> &s, const Eigen::Matrix<std::complex<Real>, 4, 4> &u, int left) {
    const auto &table = s.basis->tile(left);
    auto &a = s.amplitudes;
    const auto u11 = u(1, 1), u12 = u(1, 2), u21 = u(2, 1), u22 = u(2, 2);
    for (std::size_t i = 0; i < table.lo.size(); ++i) {
        const auto x01 = a(table.lo[i]);
        const auto x10 = a(table.hi[i]);
        a(table.lo[i]) = u11 * x01 + u12 * x10;
        a(table.hi[i]) = u21 * x01 + u22 * x10;
    }
    if (u(3, 3) != std::complex<Real>(1)) {
        for (auto i : table.both) a(i) *= u(3, 3);
    }
    if (u(0, 0) != std::complex<Real>(1)) {
        for (auto i : table.none) a(i) *= u(0, 0);
    }
}

/// Sector-restricted counterpart of step(); valid for number-conserving gates only.
template <typename Real>
void sector_step(SectorState<Real> &s, const Eigen::Matrix<std::complex<Real>, 4, 4> &u0,
                 const Eigen::Matrix<std::complex<Real>, 4, 4> &u1, LayerOrder order = LayerOrder::even_first) {
    const int n = s.basis->sites();
    auto even = [&] {
        for (int l = 0; l < n; l += 2) sector_apply_tile(s, u0, l);
    };
    auto odd = [&] {
        for (int l = 1; l < n; l += 2) sector_apply_tile(s, u1, l);
    };
    if (order == LayerOrder::even_first) {
        even();
        odd();
    } else {
        odd();
        even();
    }
}

template <typename Real = double>
SectorState<Real> sector_evolve(std::shared_ptr<const SectorBasis> basis, const Configuration &b,
                                const PuqcaRule &rule, int t, LayerOrder order = LayerOrder::even_first) {
    if (t < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    auto s = sector_basis_state<Real>(std::move(basis), b);
    const auto u0 = gate_matrix<Real>(rule.w0);
    const auto u1 = gate_matrix<Real>(rule.w1);
    for (int i = 0; i < t; ++i) {
        sector_step(s, u0, u1, order);
    }
    return s;
}

template <typename Real>
Real sector_excitation_probability(const SectorState<Real> &s, int p) {
    if (p < 0 || p >= s.basis->sites()) {
        throw std::out_of_range("site index out of range");
    }
    Real total = 0;
    for (auto i : s.basis->occupied(p)) total += std::norm(s.amplitudes(i));
    return total;
}

/// Embeds a sector state into the full 2^n space.
template <typename Real>
BasicStateVector<Real> to_dense(const SectorState<Real> &s) {
    const int n = s.basis->sites();
    typename BasicStateVector<Real>::Amplitudes full =
        BasicStateVector<Real>::Amplitudes::Zero(Eigen::Index{1} << n);
    const auto &states = s.basis->states();
    for (std::size_t i = 0; i < states.size(); ++i) {
        full(static_cast<Eigen::Index>(states[i])) = s.amplitudes(static_cast<Eigen::Index>(i));
    }
    return BasicStateVector<Real>(n, std::move(full));
}

}  // namespace puqca
