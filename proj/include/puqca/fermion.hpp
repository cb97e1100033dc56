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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "puqca/dct.hpp"
#include "puqca/model.hpp"

namespace puqca {

/// Boundary treatment of the wrap-around bond {n-1, 0} in the fermionic picture.
///
/// periodic: plain periodic hopping for every particle number. This is the momentum-block
///   formula taken at face value; it agrees with the spin chain for odd particle numbers only.
/// jordan_wigner: the wrap bond carries the string sign (-1)^{N-1} for N particles, i.e.
///   momenta are shifted by 1/2 for even N. This reproduces the periodic spin chain exactly.
enum class FermionBoundary { periodic, jordan_wigner };

/// A gate outside the α = 0, φ = 0 family was handed to the free-fermion path.
class NotSimulableError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Gates from two-site Hamiltonians ---------------------------------------------------------

/// h = J e^{iθ} |01⟩⟨10| + h.c. + h1 σz ⊗ I + h2 I ⊗ σz, basis (|00⟩, |01⟩, |10⟩, |11⟩).
Eigen::Matrix4cd ising_hamiltonian(double coupling, double theta, double h1, double h2);

/// Closed form of e^{-iτh} with Ω = τ√((h1-h2)² + J²), φ = (h1+h2)τ and
/// (cos β, sin β) = (h1-h2, J)/√((h1-h2)² + J²). At h1 = h2, cos β = 0 and sin β = sign(J).
Eigen::Matrix4cd gate_from_hamiltonian(double coupling, double theta, double h1, double h2, double tau);

/// Two-mode generator M = [[2h1, J e^{-iθ}], [J e^{iθ}, 2h2]] of the Heisenberg equations.
Eigen::Matrix2cd two_mode_generator(double coupling, double theta, double h1, double h2);

/// a = cos Ω + i cos β sin Ω, b = i e^{-iθ} sin β sin Ω; e^{iMτ} = e^{iφ} [[a, b], [-b*, a*]].
SingleParticleBlock heisenberg_block(double omega, double beta, double theta);

/// A = e^{-ihτ} for Hermitian h (tolerance 1e-12). Throws std::invalid_argument otherwise.
Eigen::MatrixXcd quadratic_propagator(const Eigen::MatrixXcd &h, double tau);

// Single-particle propagators ---------------------------------------------------------------

/// X_n = Σ_j |j⟩⟨j+1 mod n|, with `wrap_sign` on the entry (n-1, 0).
Eigen::MatrixXcd cyclic_shift(int n, double wrap_sign = 1.0);

struct LayerPair {
    Eigen::MatrixXcd even;  // A_e = I_{n/2} ⊗ block_1
    Eigen::MatrixXcd odd;   // A_o = X_n (I_{n/2} ⊗ block_2) X_n†
};

LayerPair layers(const FermionRule &rule, int n, double wrap_sign = 1.0);

/// One time step A_o A_e as a dense n×n matrix.
Eigen::MatrixXcd step_propagator(const FermionRule &rule, int n, double wrap_sign = 1.0);

/// 2×2 blocks M(k) for k = 0 … n/2-1, evaluated at momentum k + offset (offset 1/2 gives the
/// antiperiodic wrap bond).
std::vector<Eigen::Matrix2cd> momentum_blocks(const FermionRule &rule, int n, double offset = 0.0);

/// M^t through a Schur (eigen) decomposition; exact for large t.
Eigen::Matrix2cd block_power(const Eigen::Matrix2cd &m, int t);

/// (F ⊗ I_2)(⊕_k M(k))(F† ⊗ I_2), with the Fourier basis twisted to match `offset`.
Eigen::MatrixXcd propagator_from_blocks(std::span<const Eigen::Matrix2cd> blocks, double offset = 0.0);

// Occupation probabilities ---------------------------------------------------------------

/// Mode (cell, subcell); the lattice site is 2·cell + sub.
struct ModeLabel {
    int cell = 0;
    int sub = 0;

    int site() const { return 2 * cell + sub; }
    static ModeLabel from_site(int site) { return {site / 2, site % 2}; }
    bool operator==(const ModeLabel &) const = default;
};

using OccupationSet = std::vector<ModeLabel>;

/// Occupied modes of a configuration.
OccupationSet occupation_set(const Configuration &b);

/// Occupation of `site` after t steps from the occupied modes S, via the momentum-block
/// double sum over (k, k').
double occupation_probability(const FermionRule &rule, int n, int t, const OccupationSet &occupied,
                              ModeLabel site, FermionBoundary boundary = FermionBoundary::periodic);

/// Σ_{c∈S} |(𝔸^t)_{site,c}|² from dense n×n propagators.
double dense_occupation_probability(const FermionRule &rule, int n, int t, const OccupationSet &occupied,
                                    ModeLabel site, FermionBoundary boundary = FermionBoundary::periodic);

/// Per-mode contributions w_c with occupation = Σ_{c∈S} w_c at momentum offset `offset`.
std::vector<double> occupation_weights(const FermionRule &rule, int n, int t, ModeLabel site, double offset);

struct FermionEvalOptions {
    FermionBoundary boundary = FermionBoundary::periodic;
    std::size_t misclassified_cap = 1000;
};

/// Fitness computed through occupation probabilities; spec.p is read as (p / 2, p % 2).
FitnessReport fermion_fitness(const FermionRule &rule, const ClassifierSpec &spec,
                              std::span<const Configuration> set, const FermionEvalOptions &options = {});
FitnessReport fermion_fitness(const FermionRule &rule, const ClassifierSpec &spec,
                              const FermionEvalOptions &options = {});

// Gate <-> fermion correspondence -----------------------------------------------------------

/// α and φ within this distance of 0 (mod 2π) count as zero.
inline constexpr double kSimulableTolerance = 1e-12;

bool is_simulable(const GateParams &g);

/// (θ, ξ, γ) ↦ (a, b) = (e^{iξ} cos θ, e^{iγ} sin θ). Throws NotSimulableError unless α = φ = 0.
SingleParticleBlock fermion_block(const GateParams &g);

/// Full-regime rule with W0 = (θ1, α=0, γ1, ξ1), W1 = (θ2, α=0, γ2, ξ2).
PuqcaRule to_puqca_rule(const FermionRule &rule);

/// Inverse of to_puqca_rule. Throws NotSimulableError for α ≠ 0 or φ ≠ 0.
FermionRule to_fermion_rule(const PuqcaRule &rule);

}  // namespace puqca
