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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "puqca/model.hpp"
#include "puqca/statevector.hpp"

namespace puqca {

/// |Pr - 1/2| at or below this counts as a tie when δ = 0.
inline constexpr double kTieTolerance = 1e-12;
/// Largest lattice enumerate_valid accepts.
inline constexpr int kMaxEnumerationSites = 24;

struct ClassifierSpec {
    int n = 4;
    int t = 0;
    int p = 0;
    double delta = 0.0;

    /// Throws std::invalid_argument unless n is even and ≥ 4, t ≥ 0, 0 ≤ p < n, δ ∈ [0, 1/2).
    void validate() const;
};

enum class Engine { dense, sector };

struct EvalOptions {
    Engine engine = Engine::sector;
    LayerOrder order = LayerOrder::even_first;
    std::size_t misclassified_cap = 1000;
    /// Whole-set fitness evaluates one input per orbit of even translations.
    bool translation_reduction = true;
};

struct FitnessReport {
    double fitness = 0.0;
    std::size_t total = 0;
    std::size_t wrong_count = 0;       // guess == -maj
    std::size_t half_error_count = 0;  // guess == 0
    std::vector<Configuration> misclassified;  // first misclassified_cap failures, ascending index

    /// Σ |g - maj| over the set.
    std::size_t error_units() const { return 2 * wrong_count + half_error_count; }
    std::size_t failures() const { return wrong_count + half_error_count; }
    std::size_t correct() const { return total - failures(); }
};

/// +1 for a majority of ones, -1 for a majority of zeros, 0 at half density.
int majority(const Configuration &b);

/// Every n-site configuration with density ≠ 1/2, ascending index.
std::vector<Configuration> enumerate_valid(int n);

/// Guessing function applied to a measured excitation probability.
int guess_from_probability(double probability, double delta);

/// Excitation probability at spec.p after spec.t steps from |b⟩.
double classifier_probability(const PuqcaRule &rule, const Configuration &b, const ClassifierSpec &spec,
                              const EvalOptions &options = {});

int guess(const PuqcaRule &rule, const Configuration &b, const ClassifierSpec &spec,
          const EvalOptions &options = {});

/// Tallies a report from per-configuration probabilities (shared by every evaluation path).
FitnessReport tally_fitness(std::span<const Configuration> set, std::span<const double> probabilities,
                            double delta, std::size_t misclassified_cap = 1000);

/// Fitness from an arbitrary probability source, evaluated in parallel over the set.
FitnessReport fitness_from(const std::function<double(const Configuration &)> &probability,
                           std::span<const Configuration> set, double delta,
                           std::size_t misclassified_cap = 1000);

FitnessReport fitness(const PuqcaRule &rule, const ClassifierSpec &spec, std::span<const Configuration> set,
                      const EvalOptions &options = {});

/// Exact fitness over enumerate_valid(spec.n).
FitnessReport fitness(const PuqcaRule &rule, const ClassifierSpec &spec, const EvalOptions &options = {});

/// Number of wrong single-site readouts of a permutation rule, 2^{n-1} - 2·C(n-1, n/2-1).
std::uint64_t classical_wrong_count(int n);

/// Closed-form fitness 1 - W/T of reading one site of the unchanged input.
double classical_bound(int n);

struct SampledFitness {
    double estimate = 0.0;
    double half_width = 0.0;  // 95% normal-approximation half-width
    std::size_t samples = 0;
};

/// Fitness over configurations drawn uniformly (with replacement) from the valid set.
/// With `exhaustive` the whole set is used once and the half-width is zero.
SampledFitness sampled_fitness(const PuqcaRule &rule, const ClassifierSpec &spec, std::size_t sample_size,
                               std::uint64_t seed, bool exhaustive = false, const EvalOptions &options = {});

}  // namespace puqca
