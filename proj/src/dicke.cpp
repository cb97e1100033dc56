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

#include "puqca/dicke.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "puqca/combinatorics.hpp"
#include "puqca/dct.hpp"

namespace puqca {

namespace {

void check_weight(int n, int i) {
    if (i < 0 || i > n) {
        throw std::invalid_argument("excitation count out of range");
    }
}

std::complex<double> dicke_phase(std::uint64_t k, std::uint64_t j, std::uint64_t dim) {
    // Reduce kj mod dim before converting to keep the phase argument exact.
    const auto r = static_cast<double>((k % dim) * (j % dim) % dim);
    return std::polar(1.0, kTwoPi * r / static_cast<double>(dim));
}

}  // namespace

StateVector dicke_state(int n, int i) { return generalized_dicke(n, i, 0); }

double dicke_marginal(int n, int i, int p) {
    check_weight(n, i);
    if (p < 0 || p >= n) {
        throw std::out_of_range("site index out of range");
    }
    return static_cast<double>(i) / static_cast<double>(n);
}

StateVector generalized_dicke(int n, int i, int k) {
    check_weight(n, i);
    const std::uint64_t dim = binomial(n, i);
    if (k < 0 || static_cast<std::uint64_t>(k) >= dim) {
        throw std::invalid_argument("phase index out of range");
    }
    StateVector psi(n);
    auto &a = psi.amplitudes();
    a.setZero();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    const auto states = weight_states(n, i);
    for (std::uint64_t j = 0; j < states.size(); ++j) {
        a(static_cast<Eigen::Index>(states[j])) = scale * dicke_phase(static_cast<std::uint64_t>(k), j, dim);
    }
    return psi;
}

Eigen::MatrixXcd block_unitary(int n, int i) {
    check_weight(n, i);
    const std::uint64_t dim = binomial(n, i);
    if (dim > kMaxDickeBlock) {
        throw std::invalid_argument("Dicke block too large to materialize");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd u(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index j = 0; j < d; ++j) {
            u(j, k) = scale * dicke_phase(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j), dim);
        }
    }
    return u;
}

double dicke_fidelity(const StateVector &psi, int i) {
    return std::norm(dicke_state(psi.qubits(), i).amplitudes().dot(psi.amplitudes()));
}

ExistenceReport verify_existence(int n) {
    if (n < 4 || n % 2 != 0 || n > 12) {
        throw std::invalid_argument("verify_existence supports even n in [4, 12]");
    }
    ExistenceReport report;
    report.n = n;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i <= n; ++i) {
        const auto states = weight_states(n, i);
        const Eigen::MatrixXcd block = block_unitary(n, i);
        for (std::size_t r = 0; r < states.size(); ++r) {
            for (std::size_t c = 0; c < states.size(); ++c) {
                u(static_cast<Eigen::Index>(states[r]), static_cast<Eigen::Index>(states[c])) =
                    block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }

    report.unitarity_error = (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (report.unitarity_error > 1e-10) {
        report.violations.push_back("U is not unitary (error " + std::to_string(report.unitarity_error) + ")");
    }
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (std::popcount(static_cast<std::uint64_t>(r)) != std::popcount(static_cast<std::uint64_t>(c))) {
                report.conservation_leak = std::max(report.conservation_leak, std::abs(u(r, c)));
            }
        }
    }
    if (report.conservation_leak != 0.0) {
        report.violations.push_back("U mixes weight sectors");
    }

    for (const auto &b : enumerate_valid(n)) {
        const StateVector out(n, u.col(static_cast<Eigen::Index>(b.index())));
        const int maj = majority(b);
        ++report.inputs_checked;
        for (int p = 0; p < n; ++p) {
            ++report.site_checks;
            const int g = guess_from_probability(excitation_probability(out, p), 0.0);
            if (g != maj) {
                report.violations.push_back("input " + b.to_string() + " misclassified at site " + std::to_string(p));
            }
        }
    }
    return report;
}

}  // namespace puqca
