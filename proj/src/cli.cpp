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

#include "puqca/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "puqca/dct.hpp"
#include "puqca/fermion.hpp"
#include "puqca/ga.hpp"
#include "puqca/rule_io.hpp"
#include "puqca/sector.hpp"
#include "puqca/statevector.hpp"
#include "puqca/tables.hpp"
#include "puqca/verify.hpp"

namespace puqca {

namespace {

/// Usage problems detected after parsing (exit 2).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const std::map<std::string, LayerOrder> kOrders{{"even-first", LayerOrder::even_first},
                                                {"odd-first", LayerOrder::odd_first}};
const std::map<std::string, FermionBoundary> kBoundaries{{"periodic", FermionBoundary::periodic},
                                                         {"jordan-wigner", FermionBoundary::jordan_wigner}};
const std::map<std::string, Aggregation> kAggregations{{"mean", Aggregation::mean}, {"min", Aggregation::min}};

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

/// A rule ready for the spin-chain path, or for the free-fermion path when requested.
struct LoadedRule {
    PuqcaRule full;
    std::optional<FermionRule> fermion;
};

LoadedRule load_for_mode(const std::string &path, bool fermion_mode) {
    const RuleFile file = load_rule(path);
    LoadedRule r;
    if (const auto *f = std::get_if<FermionRule>(&file.rule)) {
        r.full = to_puqca_rule(*f);
        r.fermion = *f;
    } else {
        r.full = std::get<PuqcaRule>(file.rule);
        if (fermion_mode) r.fermion = to_fermion_rule(r.full);  // throws NotSimulableError
    }
    return r;
}

// eval ---------------------------------------------------------------------------------------

struct EvalArgs {
    std::string rule;
    int n = 0;
    int t = 0;
    int p = 1;
    double delta = 0.0;
    bool dense = false;
    bool sector = false;
    bool fermion = false;
    FermionBoundary boundary = FermionBoundary::periodic;
    LayerOrder order = LayerOrder::even_first;
    std::size_t sample = 0;
    std::uint64_t seed = 1;
    std::string csv;
};

int cmd_eval(const EvalArgs &a, std::ostream &out) {
    const ClassifierSpec spec{a.n, a.t, a.p, a.delta};
    spec.validate();
    const auto rule = load_for_mode(a.rule, a.fermion);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t cap = a.csv.empty() ? 0 : std::numeric_limits<std::size_t>::max();

    EvalOptions opts;
    opts.engine = a.dense ? Engine::dense : Engine::sector;
    opts.order = a.order;
    opts.misclassified_cap = cap;
    const char *engine_name = a.fermion ? "fermion" : (a.dense ? "dense" : "sector");

    if (a.sample > 0) {
        if (a.fermion) throw UsageError("--sample is not available with --fermion");
        const auto s = sampled_fitness(rule.full, spec, a.sample, a.seed, false, opts);
        const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << "fitness: " << fixed6(s.estimate) << " +/- " << fixed6(s.half_width) << " (95%, " << s.samples
            << " samples, seed " << a.seed << ")\n"
            << "engine: " << engine_name << "\nruntime_s: " << fixed6(secs) << "\n";
        return kExitOk;
    }

    FitnessReport report;
    if (a.fermion) {
        FermionEvalOptions fo;
        fo.boundary = a.boundary;
        fo.misclassified_cap = cap;
        report = fermion_fitness(*rule.fermion, spec, fo);
    } else {
        report = fitness(rule.full, spec, opts);
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "fitness: " << fixed6(report.fitness) << "\n"
        << "correct: " << report.correct() << " / " << report.total << "\n"
        << "misclassified: " << report.failures() << " (opposite " << report.wrong_count << ", undecided "
        << report.half_error_count << ")\n"
        << "engine: " << engine_name << "\nruntime_s: " << fixed6(secs) << "\n";

    if (!a.csv.empty()) {
        std::ostringstream csv;
        csv << "configuration,majority,probability\n";
        for (const auto &b : report.misclassified) {
            const double pr =
                a.fermion ? occupation_probability(*rule.fermion, a.n, a.t, occupation_set(b), ModeLabel::from_site(a.p),
                                                   a.boundary)
                          : classifier_probability(rule.full, b, spec, opts);
            csv << b.to_string() << ',' << majority(b) << ',' << format_real(pr) << '\n';
        }
        write_text(a.csv, csv.str());
    }
    return kExitOk;
}

// profile ------------------------------------------------------------------------------------

struct ProfileArgs {
    std::string rule;
    std::string input;
    int t = 0;
    bool fermion = false;
    FermionBoundary boundary = FermionBoundary::periodic;
    LayerOrder order = LayerOrder::even_first;
};

int cmd_profile(const ProfileArgs &a, std::ostream &out) {
    const Configuration b(a.input);
    if (a.t < 0) throw UsageError("--t must be non-negative");
    const auto rule = load_for_mode(a.rule, a.fermion);
    std::vector<double> profile(static_cast<std::size_t>(b.size()));
    if (a.fermion) {
        const auto occupied = occupation_set(b);
        for (int j = 0; j < b.size(); ++j) {
            profile[static_cast<std::size_t>(j)] =
                occupation_probability(*rule.fermion, b.size(), a.t, occupied, ModeLabel::from_site(j), a.boundary);
        }
    } else {
        auto basis = std::make_shared<const SectorBasis>(b.size(), b.weight());
        const auto s = sector_evolve(basis, b, rule.full, a.t, a.order);
        for (int j = 0; j < b.size(); ++j) {
            profile[static_cast<std::size_t>(j)] = sector_excitation_probability(s, j);
        }
    }
    out << "site,probability\n";
    for (std::size_t j = 0; j < profile.size(); ++j) out << j << ',' << format_real(profile[j]) << '\n';
    return kExitOk;
}

// search -------------------------------------------------------------------------------------

struct SearchArgs {
    int n = 0;
    int t = -1;
    int p = 1;
    double delta = 0.0;
    std::size_t pop = 100;
    int gens = 100;
    double pm = 0.36;
    double sigma = 0.45;
    std::uint64_t seed = 1;
    std::string sizes;
    Aggregation aggregate = Aggregation::mean;
    bool fermion = false;
    FermionBoundary boundary = FermionBoundary::periodic;
    bool elitism = false;
    std::string out;
    std::string history;
};

std::vector<SizeSpec> parse_sizes(const std::string &text) {
    std::vector<SizeSpec> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("--sizes entries must look like n:t, got '" + item + "'");
        try {
            std::size_t used_n = 0;
            std::size_t used_t = 0;
            const int n = std::stoi(item.substr(0, colon), &used_n);
            const int t = std::stoi(item.substr(colon + 1), &used_t);
            if (used_n != colon || used_t != item.size() - colon - 1) throw std::invalid_argument(item);
            sizes.push_back({n, t});
        } catch (const std::logic_error &) {
            throw UsageError("--sizes entries must look like n:t, got '" + item + "'");
        }
    }
    if (sizes.empty()) throw UsageError("--sizes must list at least one n:t pair");
    return sizes;
}

int cmd_search(const SearchArgs &a, std::ostream &out) {
    std::vector<SizeSpec> sizes;
    if (!a.sizes.empty()) {
        sizes = parse_sizes(a.sizes);
    } else {
        if (a.n == 0 || a.t < 0) throw UsageError("search needs --n and --t, or --sizes");
        sizes.push_back({a.n, a.t});
    }
    GAConfig cfg;
    cfg.population_size = a.pop;
    cfg.max_generations = a.gens;
    cfg.p_m = a.pm;
    cfg.sigma = a.sigma;
    cfg.seed = a.seed;
    cfg.regime = a.fermion ? Regime::fermionic : Regime::full;
    cfg.elitism = a.elitism;
    cfg.validate();

    ObjectiveOptions oo;
    oo.regime = cfg.regime;
    oo.aggregation = a.aggregate;
    oo.boundary = a.boundary;
    const auto objective = multi_size_objective(sizes, a.p, a.delta, oo);
    const auto start = std::chrono::steady_clock::now();
    const auto result = evolve_search(cfg, objective);
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    RuleFile file;
    file.label = "search seed " + std::to_string(a.seed);
    file.source = "genetic search";
    if (a.fermion) {
        file.rule = genes_to_fermion_rule(result.best.genes);
    } else {
        file.rule = genes_to_rule(result.best.genes);
    }

    out << "best_fitness: " << fixed6(*result.best.fitness) << "\n"
        << "generations: " << result.generations << "\n"
        << "solved: " << (result.solved ? "yes" : "no") << "\n"
        << "runtime_s: " << fixed6(secs) << "\n";
    if (a.out.empty()) {
        out << serialize_rule(file);
    } else {
        save_rule(a.out, file);
    }
    if (!a.history.empty()) {
        std::ostringstream h;
        h << "generation,best_fitness\n";
        for (std::size_t g = 0; g < result.history.size(); ++g) h << g << ',' << format_real(result.history[g]) << '\n';
        write_text(a.history, h.str());
    }
    return kExitOk;
}

// verify-tables ------------------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> tables;
    std::string conventions = "default";
    bool dense = false;
    std::string report;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    VerifyOptions opts;
    opts.mode = a.conventions == "search" ? ConventionMode::search : ConventionMode::fixed;
    opts.engine = a.dense ? Engine::dense : Engine::sector;
    opts.families = a.tables;
    const auto &tables = reference_tables();
    for (const auto &id : a.tables) {
        try {
            (void)tables.family(id);
        } catch (const std::out_of_range &e) {
            throw UsageError(e.what());
        }
    }
    const auto report = verify_tables(tables, opts);
    for (const auto &f : report.families) {
        const auto matched =
            std::count_if(f.rows.begin(), f.rows.end(), [](const ReportRow &r) { return r.match; });
        const std::string variant = f.closest.empty() ? f.variant : f.variant + ", closest " + f.closest;
        out << f.id << ": " << (f.passed ? "PASS" : "FAIL") << " (variant " << variant << ", " << matched << "/"
            << f.rows.size() << " rows, " << f.variants_tried << " variant(s) tried)\n";
    }
    if (a.report == "-") {
        out << report.csv();
    } else if (!a.report.empty()) {
        write_text(a.report, report.csv());
    }
    return report.passed() ? kExitOk : kExitVerificationFailure;
}

// bound --------------------------------------------------------------------------------------

int cmd_bound(int n, std::ostream &out) {
    if (n < 2 || n % 2 != 0) throw UsageError("bound needs an even n >= 2");
    if (n > kMaxSites) throw UsageError("n too large");
    out << fixed6(classical_bound(n)) << "\n";
    return kExitOk;
}

// crosscheck ---------------------------------------------------------------------------------

struct CrosscheckArgs {
    int n = 6;
    int t = 3;
    int trials = 50;
    std::uint64_t seed = 1;
    std::string rule;
};

inline constexpr double kCrosscheckTolerance = 1e-9;

int cmd_crosscheck(const CrosscheckArgs &a, std::ostream &out) {
    if (a.n < 2 || a.n % 2 != 0 || a.n > 12) throw UsageError("crosscheck needs an even n in [2, 12]");
    if (a.t < 0) throw UsageError("--t must be non-negative");
    if (a.trials < 1) throw UsageError("--trials must be positive");
    std::optional<FermionRule> fixed;
    if (!a.rule.empty()) fixed = *load_for_mode(a.rule, true).fermion;

    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << a.n) - 1);
    double worst = 0.0;
    for (int trial = 0; trial < a.trials; ++trial) {
        FermionRule fr = fixed ? *fixed : FermionRule(angle(rng), angle(rng), angle(rng), angle(rng), angle(rng), angle(rng));
        const Configuration b(a.n, pick(rng));
        const auto spin = marginal_profile(evolve(b, to_puqca_rule(fr), a.t));
        const auto occupied = occupation_set(b);
        for (int j = 0; j < a.n; ++j) {
            const double f = occupation_probability(fr, a.n, a.t, occupied, ModeLabel::from_site(j),
                                                    FermionBoundary::jordan_wigner);
            worst = std::max(worst, std::abs(f - spin[static_cast<std::size_t>(j)]));
        }
    }
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3e", worst);
    const bool pass = worst <= kCrosscheckTolerance;
    out << "trials: " << a.trials << "\nmax_deviation: " << dev << "\nresult: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Density classification with partitioned unitary quantum cellular automata"};
    app.name("puqca");
    app.require_subcommand(1);

    EvalArgs ev;
    auto *eval = app.add_subcommand("eval", "Exact or sampled fitness of a rule");
    eval->add_option("--rule", ev.rule, "Rule file (JSON)")->required();
    eval->add_option("--n", ev.n, "Lattice size (even)")->required();
    eval->add_option("--t", ev.t, "Time steps")->required();
    eval->add_option("--p", ev.p, "Readout site (0-based)")->capture_default_str();
    eval->add_option("--delta", ev.delta, "Guess margin")->capture_default_str();
    auto *dense_flag = eval->add_flag("--dense", ev.dense, "Full 2^n state vectors");
    eval->add_flag("--sector-fast", ev.sector, "Fixed-weight sector simulation (default)")->excludes(dense_flag);
    eval->add_flag("--fermion", ev.fermion, "Free-fermion momentum-block path");
    eval->add_option("--boundary", ev.boundary, "Fermion wrap bond: periodic|jordan-wigner")
        ->transform(CLI::CheckedTransformer(kBoundaries));
    eval->add_option("--order", ev.order, "Layer order: even-first|odd-first")->transform(CLI::CheckedTransformer(kOrders));
    eval->add_option("--sample", ev.sample, "Estimate from N uniform samples");
    eval->add_option("--seed", ev.seed, "Sampling seed")->capture_default_str();
    eval->add_option("--csv", ev.csv, "Write misclassified configurations to this CSV file");

    ProfileArgs pr;
    auto *profile = app.add_subcommand("profile", "Per-site excitation probabilities as CSV");
    profile->add_option("--rule", pr.rule, "Rule file (JSON)")->required();
    profile->add_option("--input", pr.input, "Initial configuration, e.g. 10110000")->required();
    profile->add_option("--t", pr.t, "Time steps")->required();
    profile->add_flag("--fermion", pr.fermion, "Free-fermion momentum-block path");
    profile->add_option("--boundary", pr.boundary, "Fermion wrap bond: periodic|jordan-wigner")
        ->transform(CLI::CheckedTransformer(kBoundaries));
    profile->add_option("--order", pr.order, "Layer order: even-first|odd-first")
        ->transform(CLI::CheckedTransformer(kOrders));

    SearchArgs se;
    auto *search = app.add_subcommand("search", "Genetic search for a classifier rule");
    search->add_option("--n", se.n, "Lattice size");
    search->add_option("--t", se.t, "Time steps");
    search->add_option("--p", se.p, "Readout site")->capture_default_str();
    search->add_option("--delta", se.delta, "Guess margin")->capture_default_str();
    search->add_option("--pop", se.pop, "Population size")->capture_default_str();
    search->add_option("--gens", se.gens, "Maximum generations")->capture_default_str();
    search->add_option("--pm", se.pm, "Per-gene mutation probability")->capture_default_str();
    search->add_option("--sigma", se.sigma, "Mutation standard deviation")->capture_default_str();
    search->add_option("--seed", se.seed, "Random seed")->capture_default_str();
    search->add_option("--sizes", se.sizes, "Multi-size objective, e.g. 4:2,6:3,8:4");
    search->add_option("--aggregate", se.aggregate, "Multi-size aggregation: mean|min")
        ->transform(CLI::CheckedTransformer(kAggregations));
    search->add_flag("--fermion", se.fermion, "Six-angle free-fermion regime");
    search->add_option("--boundary", se.boundary, "Fermion wrap bond: periodic|jordan-wigner")
        ->transform(CLI::CheckedTransformer(kBoundaries));
    search->add_flag("--elitism", se.elitism, "Carry the best individual over unchanged");
    search->add_option("--out", se.out, "Write the best rule here (default: stdout)");
    search->add_option("--history", se.history, "Write per-generation best fitness as CSV");

    VerifyArgs ve;
    auto *verify = app.add_subcommand("verify-tables", "Recompute every reference table");
    verify->add_option("--tables", ve.tables, "Comma-separated family ids (default: all)")->delimiter(',');
    verify->add_option("--conventions", ve.conventions, "default|search")
        ->check(CLI::IsMember({"default", "search"}))
        ->capture_default_str();
    verify->add_flag("--dense", ve.dense, "Full 2^n state vectors instead of sectors");
    verify->add_option("--report", ve.report, "Write the CSV report here ('-' for stdout)");

    int bound_n = 0;
    auto *bound = app.add_subcommand("bound", "Closed-form classical fitness bound");
    bound->add_option("n", bound_n, "Lattice size (even)")->required();

    CrosscheckArgs cc;
    auto *cross = app.add_subcommand("crosscheck", "Free-fermion vs state-vector marginals on random rules");
    cross->add_option("--n", cc.n, "Lattice size (even, <= 12)")->capture_default_str();
    cross->add_option("--t", cc.t, "Time steps")->capture_default_str();
    cross->add_option("--trials", cc.trials, "Random rule/input pairs")->capture_default_str();
    cross->add_option("--seed", cc.seed, "Random seed")->capture_default_str();
    cross->add_option("--rule", cc.rule, "Use this rule instead of random ones");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(ev, out);
        if (profile->parsed()) return cmd_profile(pr, out);
        if (search->parsed()) return cmd_search(se, out);
        if (verify->parsed()) return cmd_verify(ve, out);
        if (bound->parsed()) return cmd_bound(bound_n, out);
        if (cross->parsed()) return cmd_crosscheck(cc, out);
    } catch (const NotSimulableError &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuleMismatch;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RuleParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace puqca
