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

#include "puqca/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "puqca/statevector.hpp"

namespace puqca {

std::string Variant::name() const {
    std::vector<std::string> parts;
    if (order == LayerOrder::odd_first) parts.emplace_back("odd-first");
    if (site_offset != 0) parts.push_back("site-offset" + std::to_string(site_offset));
    if (swapped_factors) parts.emplace_back("swapped-factors");
    if (reversed_shift) parts.emplace_back("reversed-shift");
    if (third == ThirdAngle::alpha) parts.emplace_back("third-as-alpha");
    if (boundary == FermionBoundary::jordan_wigner) parts.emplace_back("jordan-wigner-boundary");
    if (parts.empty()) return "default";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

GateParams swap_factors(const GateParams &g) {
    return {g.theta(), g.alpha(), g.alpha() - g.gamma() + std::numbers::pi, g.alpha() - g.xi(), g.phi()};
}

std::vector<Variant> variants_for(FamilyKind kind) {
    std::vector<Variant> out;
    switch (kind) {
    case FamilyKind::bound:
        out.emplace_back();
        break;
    case FamilyKind::full:
        for (bool swapped : {false, true}) {
            for (int offset : {0, -1}) {
                for (auto order : {LayerOrder::even_first, LayerOrder::odd_first}) {
                    Variant v;
                    v.order = order;
                    v.site_offset = offset;
                    v.swapped_factors = swapped;
                    out.push_back(v);
                }
            }
        }
        break;
    case FamilyKind::simulable:
        for (auto third : {ThirdAngle::gamma, ThirdAngle::alpha}) {
            for (auto boundary : {FermionBoundary::periodic, FermionBoundary::jordan_wigner}) {
                // The α reading runs on the spin chain, where the boundary choice does not apply.
                if (third == ThirdAngle::alpha && boundary == FermionBoundary::jordan_wigner) continue;
                for (int offset : {0, -1}) {
                    Variant v;
                    v.third = third;
                    v.boundary = boundary;
                    v.site_offset = offset;
                    out.push_back(v);
                }
            }
        }
        break;
    case FamilyKind::translation:
        for (bool reversed : {false, true}) {
            for (int offset : {0, -1}) {
                Variant v;
                v.reversed_shift = reversed;
                v.site_offset = offset;
                out.push_back(v);
            }
        }
        break;
    }
    return out;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool VerificationReport::passed() const {
    return std::all_of(families.begin(), families.end(), [](const FamilyResult &f) { return f.passed; });
}

std::string VerificationReport::csv() const {
    std::ostringstream out;
    out << "table,n,t,p,expected,computed,match,variant\n";
    for (const auto &f : families) {
        for (const auto &r : f.rows) {
            out << r.table << ',' << r.n << ',' << r.t << ',' << r.p << ',' << format_real(r.expected) << ','
                << format_real(r.computed) << ',' << (r.match ? "true" : "false") << ',' << r.variant << '\n';
        }
    }
    return out.str();
}

namespace {

int readout_site(int p, int n, const Variant &v) { return ((p + v.site_offset) % n + n) % n; }

PuqcaRule variant_rule(const PuqcaRule &rule, const Variant &v) {
    if (!v.swapped_factors) return rule;
    return {swap_factors(rule.w0), swap_factors(rule.w1)};
}

ReportRow make_row(const std::string &table, const TableRow &row, int p, double computed, bool match,
                   const Variant &v) {
    return {table, row.n, row.t, p, row.expected, computed, match, v.name()};
}

}  // namespace

std::vector<ReportRow> evaluate_row(const TableFamily &family, const TableRow &row, const Variant &v, double tolerance,
                                    Engine engine) {
    const auto close = [tolerance](double a, double b) { return std::abs(a - b) <= tolerance; };
    switch (family.kind) {
    case FamilyKind::bound: {
        const double f = classical_bound(row.n);
        return {make_row(family.id, row, row.p, f, close(f, row.expected), v)};
    }
    case FamilyKind::full: {
        const ClassifierSpec spec{row.n, row.t, readout_site(row.p, row.n, v), row.delta};
        EvalOptions opts;
        opts.engine = engine;
        opts.order = v.order;
        opts.misclassified_cap = 0;
        const auto report = fitness(variant_rule(std::get<PuqcaRule>(row.rule), v), spec, opts);
        bool match = close(report.fitness, row.expected);
        if (row.failures) match = match && report.failures() == *row.failures;
        return {make_row(family.id, row, spec.p, report.fitness, match, v)};
    }
    case FamilyKind::simulable: {
        const auto &angles = std::get<SimulableAngles>(row.rule);
        const ClassifierSpec spec{row.n, row.t, readout_site(row.p, row.n, v), row.delta};
        double f = 0.0;
        if (v.third == ThirdAngle::gamma) {
            FermionEvalOptions fo;
            fo.boundary = v.boundary;
            fo.misclassified_cap = 0;
            f = fermion_fitness(angles.as_fermion_rule(), spec, fo).fitness;
        } else {
            EvalOptions opts;
            opts.engine = engine;
            opts.misclassified_cap = 0;
            f = fitness(angles.as_alpha_rule(), spec, opts).fitness;
        }
        return {make_row(family.id, row, spec.p, f, close(f, row.expected), v)};
    }
    case FamilyKind::translation: {
        const auto &rule = std::get<PuqcaRule>(row.rule);
        const Configuration b(row.input);
        const Configuration shifted(row.shifted);
        const int m = v.reversed_shift ? -2 : 2;
        const auto profile = marginal_profile(evolve(b, rule, row.t, v.order));
        const auto profile_shifted = marginal_profile(evolve(shifted, rule, row.t, v.order));
        // T^m sends site k to k - m, so the shifted profile should satisfy P'(k - m) = P(k).
        double deviation = 0.0;
        for (int k = 0; k < row.n; ++k) {
            const int target = ((k - m) % row.n + row.n) % row.n;
            deviation = std::max(deviation, std::abs(profile_shifted[static_cast<std::size_t>(target)] -
                                                     profile[static_cast<std::size_t>(k)]));
        }
        const bool pair_ok = b.translated(m) == shifted && deviation <= 1e-10;
        const int site = readout_site(row.p, row.n, v);
        const bool classified =
            guess_from_probability(profile[static_cast<std::size_t>(site)], 0.0) == majority(b);
        return {make_row(family.id + ":pair", row, site, pair_ok ? 1.0 : 0.0, pair_ok == (row.expected == 1.0), v),
                make_row(family.id + ":classified", row, site, classified ? 1.0 : 0.0,
                         classified == (row.expected == 1.0), v)};
    }
    }
    throw std::logic_error("unhandled table family kind");
}

FamilyResult verify_family(const TableFamily &family, double tolerance, const VerifyOptions &options) {
    const auto variants = variants_for(family.kind);
    FamilyResult result;
    result.id = family.id;

    auto run = [&](const Variant &v, bool stop_early) {
        std::vector<ReportRow> rows;
        for (const auto &row : family.rows) {
            auto produced = evaluate_row(family, row, v, tolerance, options.engine);
            const bool ok = std::all_of(produced.begin(), produced.end(), [](const ReportRow &r) { return r.match; });
            rows.insert(rows.end(), produced.begin(), produced.end());
            if (!ok && stop_early) return std::pair{false, rows};
        }
        const bool ok = std::all_of(rows.begin(), rows.end(), [](const ReportRow &r) { return r.match; });
        return std::pair{ok, rows};
    };

    auto leading_matches = [](const std::vector<ReportRow> &rows) {
        return static_cast<std::size_t>(
            std::find_if(rows.begin(), rows.end(), [](const ReportRow &r) { return !r.match; }) - rows.begin());
    };

    auto [ok, rows] = run(variants.front(), false);
    result.variants_tried = 1;
    result.passed = ok;
    result.variant = variants.front().name();
    if (ok || options.mode != ConventionMode::search) {
        result.rows = std::move(rows);
        return result;
    }

    std::size_t closest = 0;
    std::size_t closest_matches = leading_matches(rows);
    for (std::size_t i = 1; i < variants.size(); ++i) {
        ++result.variants_tried;
        auto [v_ok, v_rows] = run(variants[i], true);
        if (v_ok) {
            result.passed = true;
            result.variant = variants[i].name();
            result.rows = std::move(v_rows);
            return result;
        }
        if (const auto m = leading_matches(v_rows); m > closest_matches) {
            closest = i;
            closest_matches = m;
        }
    }
    // No variant matches every row: report all rows under the variant matching the longest prefix.
    result.closest = variants[closest].name();
    result.rows = closest == 0 ? std::move(rows) : run(variants[closest], false).second;
    result.variant = "none";
    return result;
}

VerificationReport verify_tables(const ReferenceTables &tables, const VerifyOptions &options) {
    VerificationReport report;
    for (const auto &id : options.families) {
        (void)tables.family(id);  // reject unknown ids up front
    }
    for (const auto &family : tables.families) {
        if (!options.families.empty() &&
            std::find(options.families.begin(), options.families.end(), family.id) == options.families.end()) {
            continue;
        }
        report.families.push_back(verify_family(family, tables.tolerance, options));
    }
    return report;
}

}  // namespace puqca
