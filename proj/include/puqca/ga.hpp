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
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "puqca/dct.hpp"
#include "puqca/fermion.hpp"
#include "puqca/model.hpp"

namespace puqca {

/// Gene layout of a chromosome.
///   full:      θ1, α1, γ1, ξ1, θ2, α2, γ2, ξ2  (W0 then W1, φ = 0)
///   fermionic: θ1, ξ1, γ1, θ2, ξ2, γ2
enum class Regime { full, fermionic };

int gene_count(Regime regime);

using Genes = std::vector<double>;

PuqcaRule genes_to_rule(std::span<const double> genes);
FermionRule genes_to_fermion_rule(std::span<const double> genes);
Genes rule_to_genes(const PuqcaRule &rule);
Genes rule_to_genes(const FermionRule &rule);

struct Individual {
    Genes genes;
    std::optional<double> fitness;
};

using Population = std::vector<Individual>;

/// Maps a chromosome to a fitness in [0, 1]. Must be pure and thread-safe.
using Objective = std::function<double(std::span<const double>)>;

/// Fitness at or above 1 - kSolvedTolerance stops a search.
inline constexpr double kSolvedTolerance = 1e-12;

struct GAConfig {
    std::size_t population_size = 100;
    int max_generations = 100;
    double p_m = 0.36;
    double sigma = 0.45;
    std::uint64_t seed = 1;
    Regime regime = Regime::full;
    bool elitism = false;

    /// Throws std::invalid_argument unless population_size ≥ 2, max_generations ≥ 0,
    /// p_m ∈ [0, 1] and sigma > 0.
    void validate() const;
};

using Rng = std::mt19937_64;

/// Independent generator per purpose, derived from (seed, stream).
enum class RngStream : std::uint32_t { init = 1, selection = 2, mutation = 3 };
Rng make_stream(std::uint64_t seed, RngStream stream);

/// population_size chromosomes with genes uniform in [0, 2π).
Population init_population(const GAConfig &cfg, Rng &rng);
Population init_population(const GAConfig &cfg);

/// Fitness-proportional sampling with replacement; uniform when every fitness is zero.
/// Throws std::invalid_argument if any fitness is unset or negative.
Population roulette_select(const Population &pop, Rng &rng);

/// Visits genes individual-major, gene-minor. Each visit draws u ~ U[0,1); if u < p_m the gene
/// becomes wrap(g + N(0, σ²)) and the individual's cached fitness is cleared.
void mutate(Population &pop, double p_m, double sigma, Rng &rng);

/// Fills in every unset fitness, in parallel over individuals.
void evaluate(Population &pop, const Objective &objective);

/// Index of the highest fitness (lowest index on ties). Requires every fitness set.
std::size_t best_index(const Population &pop);

struct SearchResult {
    Individual best;
    std::vector<double> history;  // best fitness per generation, generation 0 first
    int generations = 0;          // generations run after the initial population
    bool solved = false;
};

/// Select, mutate, evaluate until max_generations or until some individual reaches F = 1.
/// Returns the best individual of the final population.
SearchResult evolve_search(const GAConfig &cfg, const Objective &objective);

enum class Aggregation { mean, min };

struct SizeSpec {
    int n = 4;
    int t = 2;
};

struct ObjectiveOptions {
    Regime regime = Regime::full;
    Aggregation aggregation = Aggregation::mean;
    EvalOptions eval{};
    FermionBoundary boundary = FermionBoundary::periodic;
};

/// Aggregated exact fitness over several (n, t) pairs with shared readout site p and margin δ.
Objective multi_size_objective(std::vector<SizeSpec> sizes, int p, double delta, const ObjectiveOptions &options = {});

/// Exact fitness for one classifier spec.
Objective single_size_objective(const ClassifierSpec &spec, const ObjectiveOptions &options = {});

}  // namespace puqca
