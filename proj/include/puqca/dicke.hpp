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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "puqca/statevector.hpp"

namespace puqca {

/// Largest sector block_unitary will materialize.
inline constexpr std::size_t kMaxDickeBlock = 5000;

/// Uniform superposition of all weight-i basis states.
StateVector dicke_state(int n, int i);

/// Single-site excitation probability of |D_n^i⟩, i/n.
double dicke_marginal(int n, int i, int p);

/// Dicke state with the phase e^{2πi kj/C(n,i)} on the j-th weight-i state (lexicographic j).
StateVector generalized_dicke(int n, int i, int k);

/// C(n,i)×C(n,i) matrix whose column k is generalized_dicke(n, i, k) restricted to the sector.
Eigen::MatrixXcd block_unitary(int n, int i);

/// |⟨D_n^i | ψ⟩|², a probe of how close ψ is to the Dicke state.
double dicke_fidelity(const StateVector &psi, int i);

struct ExistenceReport {
    int n = 0;
    double unitarity_error = 0.0;       // max |U†U - I|
    double conservation_leak = 0.0;     // max |U_{xy}| over x, y of different weight
    std::size_t inputs_checked = 0;
    std::size_t site_checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Assembles U = ⊕_i U^{(i)} and checks that every non-half-density input is classified
/// correctly at every site.
ExistenceReport verify_existence(int n);

}  // namespace puqca
