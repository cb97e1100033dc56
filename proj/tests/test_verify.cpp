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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "puqca/tables.hpp"
#include "puqca/verify.hpp"

namespace puqca {
namespace {

TEST(Tables, EmbeddedTablesParse) {
    const auto &t = reference_tables();
    EXPECT_EQ(t.version, 1);
    EXPECT_GT(t.tolerance, 0.0);
    for (const char *id : {"lower_bound", "per_size", "multi_size", "simulable_multi_a", "simulable_multi_b",
                           "fermion_per_size", "translation_pair"}) {
        EXPECT_NO_THROW(t.family(id)) << id;
    }
    EXPECT_THROW(t.family("nope"), std::out_of_range);
    EXPECT_EQ(t.family("per_size").rows.size(), 6U);
    EXPECT_EQ(t.family("multi_size").kind, FamilyKind::full);
    EXPECT_EQ(t.family("multi_size").rows.back().failures, std::optional<std::size_t>(102));
}

TEST(Tables, RejectsMalformedTables) {
    EXPECT_THROW(parse_reference_tables("{}"), std::exception);
    EXPECT_THROW(parse_reference_tables(R"({"version": 1, "tolerance": 1e-4, "families": [{"id": "x"}]})"),
                 std::exception);
}

TEST(Tables, SimulableReadings) {
    SimulableAngles a;
    a.theta1 = 0.1;
    a.xi1 = 0.2;
    a.third1 = 0.3;
    a.theta2 = 0.4;
    a.xi2 = 0.5;
    a.third2 = 0.6;
    EXPECT_EQ(a.as_fermion_rule(), FermionRule(0.1, 0.2, 0.3, 0.4, 0.5, 0.6));
    const auto r = a.as_alpha_rule();
    EXPECT_EQ(r.w0, GateParams(0.1, 0.3, 0.0, 0.2));
    EXPECT_EQ(r.w1, GateParams(0.4, 0.6, 0.0, 0.5));
}

TEST(Variants, NamesAndCounts) {
    EXPECT_EQ(Variant{}.name(), "default");
    Variant v;
    v.order = LayerOrder::odd_first;
    v.reversed_shift = true;
    EXPECT_EQ(v.name(), "odd-first+reversed-shift");
    for (auto kind : {FamilyKind::bound, FamilyKind::full, FamilyKind::simulable, FamilyKind::translation}) {
        const auto vs = variants_for(kind);
        ASSERT_FALSE(vs.empty());
        EXPECT_LE(vs.size(), 32U);
        EXPECT_EQ(vs.front().name(), "default");
        std::set<std::string> names;
        for (const auto &x : vs) names.insert(x.name());
        EXPECT_EQ(names.size(), vs.size());
    }
}

TEST(Variants, SwapFactorsConjugatesBySwap) {
    Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> a(0.0, kTwoPi);
    for (int i = 0; i < 50; ++i) {
        const GateParams g(a(rng), a(rng), a(rng), a(rng), a(rng));
        const Eigen::Matrix4cd expected = swap * gate_matrix(g) * swap;
        EXPECT_LE((gate_matrix(swap_factors(g)) - expected).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Verify, LowerBoundFamilyPasses) {
    const auto &t = reference_tables();
    const auto r = verify_family(t.family("lower_bound"), t.tolerance);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.variant, "default");
    EXPECT_EQ(r.variants_tried, 1U);
    for (const auto &row : r.rows) EXPECT_TRUE(row.match) << row.n;
}

TEST(Verify, FermionPerSizePassesWithDefaults) {
    const auto &t = reference_tables();
    const auto r = verify_family(t.family("fermion_per_size"), t.tolerance);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.rows.size(), 6U);
}

TEST(Verify, TranslationFamilyNeedsConventionSearch) {
    const auto &t = reference_tables();
    VerifyOptions search;
    search.mode = ConventionMode::search;
    const auto r = verify_family(t.family("translation_pair"), t.tolerance, search);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.variant, "reversed-shift");
    EXPECT_GT(r.variants_tried, 1U);
    EXPECT_FALSE(verify_family(t.family("translation_pair"), t.tolerance).passed);
}

TEST(Verify, MismatchReportsClosestVariant) {
    TableFamily fam;
    fam.id = "synthetic";
    fam.kind = FamilyKind::full;
    TableRow row;
    row.n = 4;
    row.t = 2;
    row.p = 1;
    row.expected = 0.123;
    row.rule = PuqcaRule::identity();
    fam.rows.push_back(row);
    VerifyOptions search;
    search.mode = ConventionMode::search;
    const auto r = verify_family(fam, 1e-4, search);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.variant, "none");
    EXPECT_EQ(r.variants_tried, variants_for(FamilyKind::full).size());
    ASSERT_EQ(r.rows.size(), 1U);
    EXPECT_DOUBLE_EQ(r.rows[0].computed, 0.8);
    EXPECT_FALSE(r.rows[0].match);
}

TEST(Verify, CsvLayout) {
    const auto &t = reference_tables();
    VerifyOptions opts;
    opts.families = {"lower_bound"};
    const auto report = verify_tables(t, opts);
    ASSERT_EQ(report.families.size(), 1U);
    EXPECT_TRUE(report.passed());
    const auto csv = report.csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "table,n,t,p,expected,computed,match,variant");
    EXPECT_NE(csv.find("lower_bound,4,"), std::string::npos);
    EXPECT_EQ(std::stod(format_real(0.1)), 0.1);
    EXPECT_EQ(std::stod(format_real(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace puqca
