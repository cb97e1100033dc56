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

#include "puqca/dct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "puqca/combinatorics.hpp"
#include "puqca/parallel.hpp"
#include "puqca/sector.hpp"

namespace puqca {

void ClassifierSpec::validate() const {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("classification needs an even lattice size n >= 4, got " + std::to_string(n));
    }
    if (t < 0) {
        throw std::invalid_argument("step count must be non-negative");
    }
    if (p < 0 || p >= n) {
        throw std::invalid_argument("measurement site out of range");
    }
    if (!(delta >= 0.0 && delta < 0.5)) {
        throw std::invalid_argument("delta must lie in [0, 1/2)");
    }
}

int majority(const Configuration &b) {
    const int w = b.weight();
    const int half = b.size() / 2;
    return w > half ? 1 : (w < half ? -1 : 0);
}

std::vector<Configuration> enumerate_valid(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw std::invalid_argument("lattice size must be even");
    }
    if (n > kMaxEnumerationSites) {
        throw std::invalid_argument("enumeration cap exceeded (n > " + std::to_string(kMaxEnumerationSites) + ")");
    }
    std::vector<Configuration> out;
    const std::uint64_t count = std::uint64_t{1} << n;
    out.reserve(count - binomial(n, n / 2));
    for (std::uint64_t l = 0; l < count; ++l) {
        if (std::popcount(l) != n / 2) {
            out.emplace_back(n, l);
        }
    }
    return out;
}

int guess_from_probability(double probability, double delta) {
    if (delta == 0.0) {
        if (probability > 0.5 + kTieTolerance) return 1;
        if (probability < 0.5 - kTieTolerance) return -1;
        return 0;
    }
    if (probability >= 0.5 + delta) return 1;
    if (probability <= 0.5 - delta) return -1;
    return 0;
}

namespace {

/// Probability source for one rule; sector bases are built once per weight up front.
class RuleEvaluator {
  public:
    RuleEvaluator(const PuqcaRule &rule, const ClassifierSpec &spec, const EvalOptions &options)
        : rule_(rule), spec_(spec), options_(options) {
        spec_.validate();
        if (options_.engine == Engine::sector) {
            bases_.resize(static_cast<std::size_t>(spec_.n + 1));
        }
    }

    void prepare(std::span<const Configuration> set) {
        if (options_.engine != Engine::sector) return;
        for (const auto &b : set) {
            auto &slot = bases_.at(static_cast<std::size_t>(b.weight()));
            if (!slot) slot = std::make_shared<const SectorBasis>(spec_.n, b.weight());
        }
    }

    double operator()(const Configuration &b) const { return sites(b, {spec_.p}).front(); }

    /// Excitation probabilities at several sites from a single evolution of |b⟩.
    std::vector<double> sites(const Configuration &b, const std::vector<int> &which) const {
        if (b.size() != spec_.n) {
            throw std::invalid_argument("configuration size does not match the lattice size");
        }
        std::vector<double> out;
        out.reserve(which.size());
        if (options_.engine == Engine::dense) {
            const auto psi = evolve(b, rule_, spec_.t, options_.order);
            for (int p : which) out.push_back(excitation_probability(psi, p));
            return out;
        }
        auto basis = bases_.at(static_cast<std::size_t>(b.weight()));
        if (!basis) basis = std::make_shared<const SectorBasis>(spec_.n, b.weight());
        const auto s = sector_evolve(basis, b, rule_, spec_.t, options_.order);
        for (int p : which) out.push_back(sector_excitation_probability(s, p));
        return out;
    }

  private:
    PuqcaRule rule_;
    ClassifierSpec spec_;
    EvalOptions options_;
    std::vector<std::shared_ptr<const SectorBasis>> bases_;
};

}  // namespace

double classifier_probability(const PuqcaRule &rule, const Configuration &b, const ClassifierSpec &spec,
                              const EvalOptions &options) {
    return RuleEvaluator(rule, spec, options)(b);
}

int guess(const PuqcaRule &rule, const Configuration &b, const ClassifierSpec &spec, const EvalOptions &options) {
    return guess_from_probability(classifier_probability(rule, b, spec, options), spec.delta);
}

FitnessReport tally_fitness(std::span<const Configuration> set, std::span<const double> probabilities,
                            double delta, std::size_t misclassified_cap) {
    if (set.empty()) {
        throw std::invalid_argument("fitness needs a non-empty configuration set");
    }
    if (set.size() != probabilities.size()) {
        throw std::invalid_argument("probability count does not match configuration count");
    }
    FitnessReport report;
    report.total = set.size();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const int maj = majority(set[i]);
        if (maj == 0) {
            throw std::invalid_argument("fitness set contains a half-density configuration");
        }
        const int g = guess_from_probability(probabilities[i], delta);
        if (g == maj) continue;
        if (g == 0) {
            ++report.half_error_count;
        } else {
            ++report.wrong_count;
        }
        if (report.misclassified.size() < misclassified_cap) {
            report.misclassified.push_back(set[i]);
        }
    }
    report.fitness = 1.0 - static_cast<double>(report.error_units()) / (2.0 * static_cast<double>(report.total));
    return report;
}

FitnessReport fitness_from(const std::function<double(const Configuration &)> &probability,
                           std::span<const Configuration> set, double delta, std::size_t misclassified_cap) {
    std::vector<double> probs(set.size());
    parallel_for(set.size(), [&](std::size_t i) { probs[i] = probability(set[i]); });
    return tally_fitness(set, probs, delta, misclassified_cap);
}

FitnessReport fitness(const PuqcaRule &rule, const ClassifierSpec &spec, std::span<const Configuration> set,
                      const EvalOptions &options) {
    RuleEvaluator evaluator(rule, spec, options);
    evaluator.prepare(set);
    return fitness_from(std::cref(evaluator), set, spec.delta, options.misclassified_cap);
}

FitnessReport fitness(const PuqcaRule &rule, const ClassifierSpec &spec, const EvalOptions &options) {
    spec.validate();
    const auto set = enumerate_valid(spec.n);
    if (!options.translation_reduction) {
        return fitness(rule, spec, set, options);
    }

    // Pr_{T^{2m} b}(p) = Pr_b(p + 2m): one evolution per orbit of even translations.
    const int n = spec.n;
    std::vector<std::size_t> representatives;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool minimal = true;
        for (int m = 2; m < n && minimal; m += 2) {
            minimal = set[i].index() <= set[i].translated(m).index();
        }
        if (minimal) representatives.push_back(i);
    }
    std::vector<int> sites;
    for (int m = 0; m < n; m += 2) sites.push_back((spec.p + m) % n);

    RuleEvaluator evaluator(rule, spec, options);
    evaluator.prepare(set);
    std::vector<double> probs(set.size());
    auto position = [&set](const Configuration &c) {
        auto it = std::lower_bound(set.begin(), set.end(), c,
                                   [](const Configuration &a, const Configuration &b) { return a.index() < b.index(); });
        return static_cast<std::size_t>(it - set.begin());
    };
    parallel_for(representatives.size(), [&](std::size_t r) {
        const Configuration &b = set[representatives[r]];
        const auto values = evaluator.sites(b, sites);
        for (int m = 0; m < n; m += 2) {
            // Orbit members can coincide for periodic inputs; they receive the same value.
            probs[position(b.translated(m))] = values[static_cast<std::size_t>(m / 2)];
        }
    });
    return tally_fitness(set, probs, spec.delta, options.misclassified_cap);
}

std::uint64_t classical_wrong_count(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw std::invalid_argument("lattice size must be even");
    }
    return (std::uint64_t{1} << (n - 1)) - 2 * binomial(n - 1, n / 2 - 1);
}

double classical_bound(int n) {
    const std::uint64_t wrong = classical_wrong_count(n);
    const std::uint64_t total = (std::uint64_t{1} << n) - binomial(n, n / 2);
    return 1.0 - static_cast<double>(wrong) / static_cast<double>(total);
}

SampledFitness sampled_fitness(const PuqcaRule &rule, const ClassifierSpec &spec, std::size_t sample_size,
                               std::uint64_t seed, bool exhaustive, const EvalOptions &options) {
    spec.validate();
    const auto valid = enumerate_valid(spec.n);
    if (exhaustive) {
        const auto report = fitness(rule, spec, valid, options);
        return {report.fitness, 0.0, report.total};
    }
    if (sample_size == 0) {
        throw std::invalid_argument("sample size must be at least 1");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
    std::vector<std::size_t> draws(sample_size);
    std::map<std::size_t, std::size_t> slot;  // valid-set position -> unique slot
    for (auto &d : draws) {
        d = pick(rng);
        slot.emplace(d, 0);
    }
    std::vector<Configuration> unique;
    unique.reserve(slot.size());
    for (auto &[pos, s] : slot) {
        s = unique.size();
        unique.push_back(valid[pos]);
    }

    RuleEvaluator evaluator(rule, spec, options);
    evaluator.prepare(unique);
    std::vector<double> probs(unique.size());
    parallel_for(unique.size(), [&](std::size_t i) { probs[i] = evaluator(unique[i]); });

    double sum = 0.0;
    double sum_sq = 0.0;
    for (auto d : draws) {
        const std::size_t u = slot.at(d);
        const double score =
            1.0 - std::abs(guess_from_probability(probs[u], spec.delta) - majority(unique[u])) / 2.0;
        sum += score;
        sum_sq += score * score;
    }
    const double n = static_cast<double>(sample_size);
    const double mean = sum / n;
    double half_width = 0.0;
    if (sample_size > 1) {
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        half_width = 1.96 * std::sqrt(var / n);
    }
    return {mean, half_width, sample_size};
}

}  // namespace puqca
