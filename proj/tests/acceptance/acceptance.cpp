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

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "puqca/dct.hpp"
#include "puqca/dicke.hpp"
#include "puqca/fermion.hpp"
#include "puqca/ga.hpp"
#include "puqca/statevector.hpp"
#include "puqca/tables.hpp"
#include "puqca/verify.hpp"

namespace {

using namespace puqca;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string describe(const FamilyResult &r) {
    std::string s = "variant " + (r.passed ? r.variant : "none, closest " + r.closest);
    for (const auto &row : r.rows) {
        s += "; " + row.table + " n=" + std::to_string(row.n) + " expected " + fmt("%.4f", row.expected) +
             " computed " + fmt("%.6f", row.computed) + (row.match ? "" : " MISMATCH");
    }
    return s;
}

Outcome table_family(const std::string &id, ConventionMode mode) {
    const auto &tables = reference_tables();
    VerifyOptions opts;
    opts.mode = mode;
    const auto r = verify_family(tables.family(id), tables.tolerance, opts);
    return {r.passed, describe(r)};
}

Outcome criterion_1() {
    const auto start = Clock::now();
    const std::vector<double> expected{0.8000, 0.7273, 0.6882, 0.6632, 0.6456, 0.6325, 0.6222};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const int n = 4 + 2 * static_cast<int>(i);
        const double b = classical_bound(n);
        ok = ok && std::abs(b - expected[i]) <= 5e-5;
        detail += "n=" + std::to_string(n) + ":" + fmt("%.4f", b) + " ";
    }
    const double secs = seconds_since(start);
    ok = ok && secs < 1.0;
    return {ok, detail + "runtime " + fmt("%.3f", secs) + " s"};
}

Outcome criterion_2() { return table_family("per_size", ConventionMode::search); }
Outcome criterion_3() { return table_family("multi_size", ConventionMode::search); }

Outcome criterion_4() {
    const auto a = table_family("simulable_multi_a", ConventionMode::search);
    const auto b = table_family("simulable_multi_b", ConventionMode::search);
    return {a.pass && b.pass, "A: " + a.detail + " | B: " + b.detail};
}

Outcome criterion_5() {
    const auto start = Clock::now();
    auto o = table_family("fermion_per_size", ConventionMode::fixed);
    const double secs = seconds_since(start);
    o.pass = o.pass && secs < 60.0;
    o.detail += "; runtime " + fmt("%.2f", secs) + " s";
    return o;
}

Outcome criterion_6() {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> tdist(0, 10);
    double worst = 0.0;
    std::size_t comparisons = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto fr = oracle::random_fermion_rule(rng);
        const auto rule = to_puqca_rule(fr);
        for (int n : {4, 6, 8, 10}) {
            const int t = tdist(rng);
            std::vector<Configuration> inputs;
            for (std::uint64_t l = 1; l < (std::uint64_t{1} << n); ++l) {
                if (std::popcount(l) <= 2) inputs.emplace_back(n, l);
            }
            std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
            for (int k = 0; k < 20;) {
                const Configuration b(n, pick(rng));
                if (b.weight() < 3) continue;
                inputs.push_back(b);
                ++k;
            }
            for (const auto &b : inputs) {
                const auto spin = marginal_profile(evolve(b, rule, t));
                const auto occupied = occupation_set(b);
                for (int j = 0; j < n; ++j) {
                    const double f = occupation_probability(fr, n, t, occupied, ModeLabel::from_site(j),
                                                            FermionBoundary::jordan_wigner);
                    worst = std::max(worst, std::abs(f - spin[static_cast<std::size_t>(j)]));
                    ++comparisons;
                }
            }
        }
    }
    return {worst <= 1e-9, "max deviation " + fmt("%.3e", worst) + " over " + std::to_string(comparisons) + " marginals"};
}

Outcome criterion_7() {
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 12; n += 2) {
        for (int i = 0; i <= n; ++i) {
            for (int p = 0; p < n; ++p) ok = ok && dicke_marginal(n, i, p) == static_cast<double>(i) / n;
        }
    }
    detail += ok ? "marginals exact; " : "marginal mismatch; ";
    for (int n : {4, 6, 8}) {
        const auto report = verify_existence(n);
        ok = ok && report.ok();
        detail += "n=" + std::to_string(n) + " " + (report.ok() ? "ok" : "FAILED") + " (" +
                  std::to_string(report.site_checks) + " site checks) ";
    }
    return {ok, detail};
}

Outcome criterion_8() {
    std::mt19937_64 rng(88);
    double worst = 0.0;
    for (int n : {4, 6, 8}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto rule = oracle::random_rule(rng);
            for (int t : {1, 4}) {
                for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
                    const Configuration b(n, l);
                    const auto base = marginal_profile(evolve(b, rule, t));
                    for (int m = 1; m < n / 2; ++m) {
                        const auto moved = marginal_profile(evolve(b.translated(2 * m), rule, t));
                        for (int p = 0; p < n; ++p) {
                            const double d = moved[static_cast<std::size_t>(p)] -
                                             base[static_cast<std::size_t>((p + 2 * m) % n)];
                            worst = std::max(worst, std::abs(d));
                        }
                    }
                }
            }
        }
    }
    return {worst <= 1e-10, "max deviation " + fmt("%.3e", worst)};
}

Outcome criterion_9() {
    bool ok = true;
    std::size_t cases = 0;
    for (int n = 4; n <= 12; n += 2) {
        for (int t : {0, 1, 5}) {
            for (int p = 0; p < n; ++p) {
                ok = ok && fitness(PuqcaRule::identity(), {n, t, p, 0.0}).fitness == classical_bound(n);
                ++cases;
            }
        }
    }
    return {ok, std::to_string(cases) + " (n, t, p) cases"};
}

Outcome criterion_10() {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double gate_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double j = u(rng), theta = angle(rng), h1 = u(rng), h2 = i % 10 == 0 ? h1 : u(rng), tau = u(rng);
        const auto w = gate_from_hamiltonian(j, theta, h1, h2, tau);
        const auto ref = oracle::expm_minus_i(ising_hamiltonian(j, theta, h1, h2), tau);
        gate_err = std::max(gate_err, (w - ref).cwiseAbs().maxCoeff());
    }
    double block_err = 0.0;
    for (int n : {4, 6, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto fr = oracle::random_fermion_rule(rng);
            const auto l = layers(fr, n);
            block_err = std::max(block_err, (propagator_from_blocks(momentum_blocks(fr, n)) - l.odd * l.even)
                                                .cwiseAbs()
                                                .maxCoeff());
        }
    }
    return {gate_err <= 1e-10 && block_err <= 1e-12,
            "gate error " + fmt("%.3e", gate_err) + ", block reconstruction error " + fmt("%.3e", block_err)};
}

Outcome criterion_11() {
    const auto start = Clock::now();
    const auto objective = single_size_objective({4, 2, 1, 0.0});
    bool solved = false;
    std::string detail;
    for (std::uint64_t seed : {1, 2, 3}) {
        GAConfig cfg;
        cfg.population_size = 100;
        cfg.max_generations = 100;
        cfg.p_m = 0.36;
        cfg.sigma = 0.45;
        cfg.seed = seed;
        const auto r = evolve_search(cfg, objective);
        detail += "seed " + std::to_string(seed) + ": F=" + fmt("%.6f", *r.best.fitness) + " after " +
                  std::to_string(r.generations) + " generations; ";
        if (r.solved) {
            solved = true;
            break;
        }
    }
    const double secs = seconds_since(start);
    return {solved && secs < 120.0, detail + "runtime " + fmt("%.1f", secs) + " s"};
}

const std::vector<std::function<Outcome()>> kCriteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                      criterion_5, criterion_6, criterion_7, criterion_8,
                                                      criterion_9, criterion_10, criterion_11};

bool run_one(int k) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = kCriteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("AC%02d %s (%.1f s) %s\n", k, o.pass ? "PASS" : "FAIL", seconds_since(start), o.detail.c_str());
    std::fflush(stdout);
    return o.pass;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            which.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (which.empty()) {
        for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) which.push_back(k);
    }
    bool all = true;
    for (int k : which) {
        if (k < 1 || k > static_cast<int>(kCriteria.size())) {
            std::fprintf(stderr, "no criterion %d\n", k);
            return 2;
        }
        all = run_one(k) && all;
    }
    return all ? 0 : 1;
}
