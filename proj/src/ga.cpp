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

#include "puqca/ga.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "puqca/parallel.hpp"

namespace puqca {

int gene_count(Regime regime) { return regime == Regime::full ? 8 : 6; }

namespace {

void check_genes(std::span<const double> genes, Regime regime) {
    if (static_cast<int>(genes.size()) != gene_count(regime)) {
        throw std::invalid_argument("expected " + std::to_string(gene_count(regime)) + " genes, got " +
                                    std::to_string(genes.size()));
    }
}

}  // namespace

PuqcaRule genes_to_rule(std::span<const double> g) {
    check_genes(g, Regime::full);
    return {GateParams(g[0], g[1], g[2], g[3]), GateParams(g[4], g[5], g[6], g[7])};
}

FermionRule genes_to_fermion_rule(std::span<const double> g) {
    check_genes(g, Regime::fermionic);
    return {g[0], g[1], g[2], g[3], g[4], g[5]};
}

Genes rule_to_genes(const PuqcaRule &r) {
    return {r.w0.theta(), r.w0.alpha(), r.w0.gamma(), r.w0.xi(), r.w1.theta(), r.w1.alpha(), r.w1.gamma(), r.w1.xi()};
}

Genes rule_to_genes(const FermionRule &r) {
    return {r.theta1(), r.xi1(), r.gamma1(), r.theta2(), r.xi2(), r.gamma2()};
}

void GAConfig::validate() const {
    if (population_size < 2) {
        throw std::invalid_argument("population size must be at least 2");
    }
    if (max_generations < 0) {
        throw std::invalid_argument("generation count must be non-negative");
    }
    if (!(p_m >= 0.0 && p_m <= 1.0)) {
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("mutation sigma must be positive");
    }
}

Rng make_stream(std::uint64_t seed, RngStream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

Population init_population(const GAConfig &cfg, Rng &rng) {
    cfg.validate();
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    Population pop(cfg.population_size);
    for (auto &ind : pop) {
        ind.genes.resize(static_cast<std::size_t>(gene_count(cfg.regime)));
        for (auto &g : ind.genes) {
            g = wrap_angle(angle(rng));
        }
    }
    return pop;
}

Population init_population(const GAConfig &cfg) {
    Rng rng = make_stream(cfg.seed, RngStream::init);
    return init_population(cfg, rng);
}

Population roulette_select(const Population &pop, Rng &rng) {
    if (pop.empty()) {
        throw std::invalid_argument("cannot select from an empty population");
    }
    std::vector<double> cumulative(pop.size());
    double total = 0.0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!pop[i].fitness) {
            throw std::invalid_argument("roulette selection needs evaluated individuals");
        }
        const double f = *pop[i].fitness;
        if (!(f >= 0.0)) {
            throw std::invalid_argument("roulette selection needs non-negative fitness");
        }
        total += f;
        cumulative[i] = total;
    }

    Population pool;
    pool.reserve(pop.size());
    if (total <= 0.0) {
        std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
        for (std::size_t i = 0; i < pop.size(); ++i) pool.push_back(pop[pick(rng)]);
        return pool;
    }
    std::uniform_real_distribution<double> spin(0.0, total);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const double r = spin(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        auto idx = static_cast<std::size_t>(it - cumulative.begin());
        if (idx == pop.size()) {
            // r rounded up to total: take the last individual with positive fitness.
            idx = pop.size() - 1;
            while (*pop[idx].fitness == 0.0) --idx;
        }
        pool.push_back(pop[idx]);
    }
    return pool;
}

void mutate(Population &pop, double p_m, double sigma, Rng &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::normal_distribution<double> kick(0.0, sigma);
    for (auto &ind : pop) {
        for (auto &g : ind.genes) {
            if (coin(rng) < p_m) {
                g = wrap_angle(g + kick(rng));
                ind.fitness.reset();
            }
        }
    }
}

void evaluate(Population &pop, const Objective &objective) {
    parallel_for(pop.size(), [&](std::size_t i) {
        if (!pop[i].fitness) pop[i].fitness = objective(pop[i].genes);
    });
}

std::size_t best_index(const Population &pop) {
    if (pop.empty()) {
        throw std::invalid_argument("empty population");
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!pop[i].fitness) {
            throw std::invalid_argument("population has unevaluated individuals");
        }
        if (*pop[i].fitness > *pop[best].fitness) best = i;
    }
    return best;
}

SearchResult evolve_search(const GAConfig &cfg, const Objective &objective) {
    cfg.validate();
    Rng init_rng = make_stream(cfg.seed, RngStream::init);
    Rng select_rng = make_stream(cfg.seed, RngStream::selection);
    Rng mutate_rng = make_stream(cfg.seed, RngStream::mutation);

    Population pop = init_population(cfg, init_rng);
    evaluate(pop, objective);

    SearchResult result;
    auto record = [&] {
        const double f = *pop[best_index(pop)].fitness;
        result.history.push_back(f);
        return f >= 1.0 - kSolvedTolerance;
    };
    result.solved = record();

    while (!result.solved && result.generations < cfg.max_generations) {
        const Individual elite = pop[best_index(pop)];
        Population next = roulette_select(pop, select_rng);
        mutate(next, cfg.p_m, cfg.sigma, mutate_rng);
        if (cfg.elitism) next.front() = elite;
        evaluate(next, objective);
        pop = std::move(next);
        ++result.generations;
        result.solved = record();
    }
    result.best = pop[best_index(pop)];
    return result;
}

namespace {

struct SizedSet {
    ClassifierSpec spec;
    std::vector<Configuration> configs;
};

double size_fitness(std::span<const double> genes, const SizedSet &s, const ObjectiveOptions &options) {
    if (options.regime == Regime::full) {
        return fitness(genes_to_rule(genes), s.spec, s.configs, options.eval).fitness;
    }
    FermionEvalOptions fo;
    fo.boundary = options.boundary;
    fo.misclassified_cap = 0;
    return fermion_fitness(genes_to_fermion_rule(genes), s.spec, s.configs, fo).fitness;
}

}  // namespace

Objective multi_size_objective(std::vector<SizeSpec> sizes, int p, double delta, const ObjectiveOptions &options) {
    if (sizes.empty()) {
        throw std::invalid_argument("multi-size objective needs at least one size");
    }
    auto sets = std::make_shared<std::vector<SizedSet>>();
    for (const auto &[n, t] : sizes) {
        ClassifierSpec spec{n, t, p, delta};
        spec.validate();
        sets->push_back({spec, enumerate_valid(n)});
    }
    ObjectiveOptions opts = options;
    opts.eval.misclassified_cap = 0;
    return [sets, opts](std::span<const double> genes) {
        std::vector<double> values;
        values.reserve(sets->size());
        for (const auto &s : *sets) values.push_back(size_fitness(genes, s, opts));
        if (opts.aggregation == Aggregation::min) {
            return *std::min_element(values.begin(), values.end());
        }
        return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    };
}

Objective single_size_objective(const ClassifierSpec &spec, const ObjectiveOptions &options) {
    return multi_size_objective({{spec.n, spec.t}}, spec.p, spec.delta, options);
}

}  // namespace puqca
