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

#include "puqca/fermion.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

namespace puqca {

using namespace std::complex_literals;

Eigen::Matrix4cd ising_hamiltonian(double coupling, double theta, double h1, double h2) {
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 0) = h1 + h2;
    h(1, 1) = h1 - h2;
    h(2, 2) = h2 - h1;
    h(3, 3) = -h1 - h2;
    h(1, 2) = coupling * cis(theta);
    h(2, 1) = coupling * cis(-theta);
    return h;
}

Eigen::Matrix4cd gate_from_hamiltonian(double coupling, double theta, double h1, double h2, double tau) {
    const double detuning = h1 - h2;
    const double radius = std::hypot(detuning, coupling);
    const double omega = tau * radius;
    const double phi = (h1 + h2) * tau;
    double cos_beta = 1.0;
    double sin_beta = 0.0;
    if (radius > 0.0) {
        cos_beta = detuning / radius;
        sin_beta = coupling / radius;
    }
    const double c = std::cos(omega);
    const double s = std::sin(omega);

    Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
    w(0, 0) = std::polar(1.0, -phi);
    w(3, 3) = std::polar(1.0, phi);
    w(1, 1) = c - 1i * cos_beta * s;
    w(2, 2) = c + 1i * cos_beta * s;
    w(1, 2) = -1i * sin_beta * s * cis(theta);
    w(2, 1) = -1i * sin_beta * s * cis(-theta);
    return w;
}

Eigen::Matrix2cd two_mode_generator(double coupling, double theta, double h1, double h2) {
    Eigen::Matrix2cd m;
    m << 2.0 * h1, coupling * cis(-theta), coupling * cis(theta), 2.0 * h2;
    return m;
}

SingleParticleBlock heisenberg_block(double omega, double beta, double theta) {
    const double s = std::sin(omega);
    return {std::cos(omega) + 1i * std::cos(beta) * s, 1i * std::sin(beta) * s * cis(-theta)};
}

Eigen::MatrixXcd quadratic_propagator(const Eigen::MatrixXcd &h, double tau) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hopping matrix must be square");
    }
    if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("hopping matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const Eigen::VectorXcd phases =
        solver.eigenvalues().unaryExpr([tau](double lambda) { return std::polar(1.0, -lambda * tau); });
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd cyclic_shift(int n, double wrap_sign) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n - 1; ++j) {
        x(j, j + 1) = 1.0;
    }
    x(n - 1, 0) = wrap_sign;
    return x;
}

namespace {

void check_modes(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("mode count must be even and at least 2");
    }
}

Eigen::MatrixXcd block_diagonal(int n, const Eigen::Matrix2cd &block) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int c = 0; c < n / 2; ++c) {
        m.block<2, 2>(2 * c, 2 * c) = block;
    }
    return m;
}

}  // namespace

LayerPair layers(const FermionRule &rule, int n, double wrap_sign) {
    check_modes(n);
    const Eigen::MatrixXcd x = cyclic_shift(n, wrap_sign);
    return {block_diagonal(n, rule.block(1).matrix()), x * block_diagonal(n, rule.block(2).matrix()) * x.adjoint()};
}

Eigen::MatrixXcd step_propagator(const FermionRule &rule, int n, double wrap_sign) {
    const auto pair = layers(rule, n, wrap_sign);
    return pair.odd * pair.even;
}

std::vector<Eigen::Matrix2cd> momentum_blocks(const FermionRule &rule, int n, double offset) {
    check_modes(n);
    const auto [a1, b1] = rule.block(1);
    const auto [a2, b2] = rule.block(2);
    std::vector<Eigen::Matrix2cd> blocks;
    blocks.reserve(static_cast<std::size_t>(n / 2));
    for (int k = 0; k < n / 2; ++k) {
        const std::complex<double> e = std::polar(1.0, 2.0 * kTwoPi * (k + offset) / n);
        const std::complex<double> ei = std::conj(e);
        Eigen::Matrix2cd m;
        m << std::conj(a2) * a1 + std::conj(b2) * std::conj(b1) * ei, std::conj(a2) * b1 - std::conj(b2) * std::conj(a1) * ei,
            a1 * b2 * e - a2 * std::conj(b1), b2 * b1 * e + a2 * std::conj(a1);
        blocks.push_back(m);
    }
    return blocks;
}

Eigen::Matrix2cd block_power(const Eigen::Matrix2cd &m, int t) {
    if (t < 0) {
        throw std::invalid_argument("block power must be non-negative");
    }
    if (t == 0) {
        return Eigen::Matrix2cd::Identity();
    }
    // Unitary blocks are normal, so the Schur form is diagonal up to rounding.
    Eigen::ComplexSchur<Eigen::Matrix2cd> schur(m);
    const Eigen::Matrix2cd &q = schur.matrixU();
    const Eigen::Matrix2cd &tri = schur.matrixT();
    Eigen::Vector2cd powers;
    for (int i = 0; i < 2; ++i) {
        const std::complex<double> lambda = tri(i, i);
        powers(i) = std::polar(std::pow(std::abs(lambda), t), t * std::arg(lambda));
    }
    return q * powers.asDiagonal() * q.adjoint();
}

Eigen::MatrixXcd propagator_from_blocks(std::span<const Eigen::Matrix2cd> blocks, double offset) {
    const auto cells = static_cast<int>(blocks.size());
    const int n = 2 * cells;
    Eigen::MatrixXcd fourier(cells, cells);
    const double scale = 1.0 / std::sqrt(static_cast<double>(cells));
    for (int j = 0; j < cells; ++j) {
        for (int k = 0; k < cells; ++k) {
            fourier(j, k) = scale * cis(kTwoPi * j * (k + offset) / cells);
        }
    }
    Eigen::MatrixXcd f2 = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < cells; ++j) {
        for (int k = 0; k < cells; ++k) {
            f2(2 * j, 2 * k) = fourier(j, k);
            f2(2 * j + 1, 2 * k + 1) = fourier(j, k);
        }
        diag.block<2, 2>(2 * j, 2 * j) = blocks[static_cast<std::size_t>(j)];
    }
    return f2 * diag * f2.adjoint();
}

OccupationSet occupation_set(const Configuration &b) {
    OccupationSet s;
    for (int p = 0; p < b.size(); ++p) {
        if (b.bit(p)) s.push_back(ModeLabel::from_site(p));
    }
    return s;
}

namespace {

double boundary_offset(FermionBoundary boundary, std::size_t particles) {
    return (boundary == FermionBoundary::jordan_wigner && particles % 2 == 0) ? 0.5 : 0.0;
}

void check_occupation(int n, int t, const OccupationSet &occupied, ModeLabel site) {
    check_modes(n);
    if (t < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    auto valid = [n](ModeLabel m) { return m.cell >= 0 && m.cell < n / 2 && (m.sub == 0 || m.sub == 1); };
    if (!valid(site)) {
        throw std::out_of_range("mode label out of range");
    }
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        if (!valid(occupied[i])) {
            throw std::out_of_range("occupied mode label out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (occupied[i] == occupied[j]) throw std::invalid_argument("occupied modes must be distinct");
        }
    }
}

double occupation_at_offset(const FermionRule &rule, int n, int t, const OccupationSet &occupied, ModeLabel site,
                            double offset) {
    const int cells = n / 2;
    std::vector<Eigen::Matrix2cd> powers;
    powers.reserve(static_cast<std::size_t>(cells));
    for (const auto &m : momentum_blocks(rule, n, offset)) {
        powers.push_back(block_power(m, t));
    }
    std::complex<double> total = 0.0;
    for (int k = 0; k < cells; ++k) {
        for (int kp = 0; kp < cells; ++kp) {
            const double dk = static_cast<double>(k - kp);
            for (const auto &c : occupied) {
                const std::complex<double> phase = std::polar(1.0, 2.0 * kTwoPi * dk * (site.cell - c.cell) / n);
                total += phase * powers[static_cast<std::size_t>(k)](site.sub, c.sub) *
                         std::conj(powers[static_cast<std::size_t>(kp)](site.sub, c.sub));
            }
        }
    }
    return 4.0 / (static_cast<double>(n) * n) * total.real();
}

}  // namespace

double occupation_probability(const FermionRule &rule, int n, int t, const OccupationSet &occupied, ModeLabel site,
                              FermionBoundary boundary) {
    check_occupation(n, t, occupied, site);
    return occupation_at_offset(rule, n, t, occupied, site, boundary_offset(boundary, occupied.size()));
}

double dense_occupation_probability(const FermionRule &rule, int n, int t, const OccupationSet &occupied,
                                    ModeLabel site, FermionBoundary boundary) {
    check_occupation(n, t, occupied, site);
    const double wrap = boundary_offset(boundary, occupied.size()) == 0.0 ? 1.0 : -1.0;
    const Eigen::MatrixXcd a = step_propagator(rule, n, wrap);
    Eigen::MatrixXcd at = Eigen::MatrixXcd::Identity(n, n);
    for (int s = 0; s < t; ++s) {
        at = a * at;
    }
    double total = 0.0;
    for (const auto &c : occupied) {
        total += std::norm(at(site.site(), c.site()));
    }
    return total;
}

std::vector<double> occupation_weights(const FermionRule &rule, int n, int t, ModeLabel site, double offset) {
    check_occupation(n, t, {}, site);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        w[static_cast<std::size_t>(c)] = occupation_at_offset(rule, n, t, {ModeLabel::from_site(c)}, site, offset);
    }
    return w;
}

FitnessReport fermion_fitness(const FermionRule &rule, const ClassifierSpec &spec, std::span<const Configuration> set,
                              const FermionEvalOptions &options) {
    spec.validate();
    const ModeLabel site = ModeLabel::from_site(spec.p);
    const auto periodic = occupation_weights(rule, spec.n, spec.t, site, 0.0);
    std::vector<double> twisted;
    if (options.boundary == FermionBoundary::jordan_wigner) {
        twisted = occupation_weights(rule, spec.n, spec.t, site, 0.5);
    }
    std::vector<double> probs(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto &b = set[i];
        if (b.size() != spec.n) {
            throw std::invalid_argument("configuration size does not match the lattice size");
        }
        const auto &w = boundary_offset(options.boundary, static_cast<std::size_t>(b.weight())) == 0.0 ? periodic : twisted;
        double pr = 0.0;
        for (int c = 0; c < spec.n; ++c) {
            if (b.bit(c)) pr += w[static_cast<std::size_t>(c)];
        }
        probs[i] = pr;
    }
    return tally_fitness(set, probs, spec.delta, options.misclassified_cap);
}

FitnessReport fermion_fitness(const FermionRule &rule, const ClassifierSpec &spec, const FermionEvalOptions &options) {
    spec.validate();
    const auto set = enumerate_valid(spec.n);
    return fermion_fitness(rule, spec, set, options);
}

namespace {

bool near_zero_angle(double a) { return std::min(a, kTwoPi - a) <= kSimulableTolerance; }

}  // namespace

bool is_simulable(const GateParams &g) { return near_zero_angle(g.alpha()) && near_zero_angle(g.phi()); }

SingleParticleBlock fermion_block(const GateParams &g) {
    if (!is_simulable(g)) {
        throw NotSimulableError("gate is not classically simulable (requires alpha = 0 and phi = 0)");
    }
    return {std::cos(g.theta()) * cis(g.xi()), std::sin(g.theta()) * cis(g.gamma())};
}

PuqcaRule to_puqca_rule(const FermionRule &rule) {
    return {GateParams(rule.theta1(), 0.0, rule.gamma1(), rule.xi1()),
            GateParams(rule.theta2(), 0.0, rule.gamma2(), rule.xi2())};
}

FermionRule to_fermion_rule(const PuqcaRule &rule) {
    if (!is_simulable(rule.w0) || !is_simulable(rule.w1)) {
        throw NotSimulableError("rule is not classically simulable (requires alpha = 0 and phi = 0)");
    }
    return {rule.w0.theta(), rule.w0.xi(), rule.w0.gamma(), rule.w1.theta(), rule.w1.xi(), rule.w1.gamma()};
}

}  // namespace puqca
