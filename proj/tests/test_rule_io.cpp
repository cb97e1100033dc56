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

#include <filesystem>

#include <gtest/gtest.h>

#include "puqca/rule_io.hpp"

namespace puqca {
namespace {

constexpr const char *kFull = R"({"schema": 1, "kind": "full", "label": "x",
  "w0": {"theta": 0.1, "alpha": 0.2, "gamma": 0.3, "xi": 0.4},
  "w1": {"theta": 0.5, "alpha": 0.6, "gamma": 0.7, "xi": 0.8, "phi": 0.9}})";

constexpr const char *kFermionic = R"({"schema": 1, "kind": "fermionic",
  "theta1": 1, "xi1": 2, "gamma1": 3, "theta2": 4, "xi2": 5, "gamma2": 6})";

TEST(RuleIo, ParsesFullRule) {
    const auto f = parse_rule(kFull);
    ASSERT_FALSE(f.is_fermionic());
    const auto &r = std::get<PuqcaRule>(f.rule);
    EXPECT_EQ(r.w0, GateParams(0.1, 0.2, 0.3, 0.4));
    EXPECT_EQ(r.w1, GateParams(0.5, 0.6, 0.7, 0.8, 0.9));
    EXPECT_EQ(f.label, "x");
    EXPECT_EQ(f.source, "");
}

TEST(RuleIo, ParsesFermionicRule) {
    const auto f = parse_rule(kFermionic);
    ASSERT_TRUE(f.is_fermionic());
    EXPECT_EQ(std::get<FermionRule>(f.rule), FermionRule(1, 2, 3, 4, 5, 6));
}

TEST(RuleIo, AnglesAreWrapped) {
    const auto f = parse_rule(R"({"schema": 1, "kind": "fermionic",
      "theta1": -1, "xi1": 7, "gamma1": 0, "theta2": 0, "xi2": 0, "gamma2": 0})");
    const auto &r = std::get<FermionRule>(f.rule);
    EXPECT_NEAR(r.theta1(), kTwoPi - 1.0, 1e-15);
    EXPECT_NEAR(r.xi1(), 7.0 - kTwoPi, 1e-15);
}

TEST(RuleIo, SerializeRoundTrip) {
    for (const char *text : {kFull, kFermionic}) {
        const auto f = parse_rule(text);
        const auto again = parse_rule(serialize_rule(f));
        EXPECT_EQ(again.rule, f.rule);
        EXPECT_EQ(again.label, f.label);
    }
}

TEST(RuleIo, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "puqca_rule_io_test.json";
    RuleFile f{PuqcaRule{GateParams(1.25, 0.5, 2.0, 3.0), GateParams(0.1, 0.0, 0.2, 0.3)}, "lbl", "src"};
    save_rule(path, f);
    const auto back = load_rule(path);
    EXPECT_EQ(back.rule, f.rule);
    EXPECT_EQ(back.source, "src");
    std::filesystem::remove(path);
    EXPECT_THROW(load_rule(path), RuleParseError);
}

TEST(RuleIo, RejectsMalformedFiles) {
    const char *bad[] = {
        "not json",
        "[]",
        R"({"schema": 1})",
        R"({"schema": 2, "kind": "full", "w0": {}, "w1": {}})",
        R"({"kind": "fermionic", "theta1": 1, "xi1": 2, "gamma1": 3, "theta2": 4, "xi2": 5, "gamma2": 6})",
        R"({"schema": 1, "kind": "other"})",
        R"({"schema": 1, "kind": "fermionic", "theta1": 1, "xi1": 2, "gamma1": 3, "theta2": 4, "xi2": 5})",
        R"({"schema": 1, "kind": "fermionic", "theta1": 1, "xi1": 2, "gamma1": 3, "theta2": 4, "xi2": 5,
            "gamma2": 6, "extra": 0})",
        R"({"schema": 1, "kind": "fermionic", "theta1": "1", "xi1": 2, "gamma1": 3, "theta2": 4, "xi2": 5,
            "gamma2": 6})",
        R"({"schema": 1, "kind": "full", "w0": {"theta": 0.1, "alpha": 0.2, "gamma": 0.3},
            "w1": {"theta": 0.5, "alpha": 0.6, "gamma": 0.7, "xi": 0.8}})",
        R"({"schema": 1, "kind": "full", "w0": {"theta": 0.1, "alpha": 0.2, "gamma": 0.3, "xi": 1, "beta": 2},
            "w1": {"theta": 0.5, "alpha": 0.6, "gamma": 0.7, "xi": 0.8}})",
        R"({"schema": 1, "kind": "full", "label": 3, "w0": {"theta": 0.1, "alpha": 0.2, "gamma": 0.3, "xi": 1},
            "w1": {"theta": 0.5, "alpha": 0.6, "gamma": 0.7, "xi": 0.8}})",
    };
    for (const char *text : bad) EXPECT_THROW(parse_rule(text), RuleParseError) << text;
}

TEST(RuleIo, ShippedRulesLoad) {
    std::size_t count = 0;
    for (const auto &entry : std::filesystem::directory_iterator(std::string(PUQCA_DATA_DIR) + "/rules")) {
        EXPECT_NO_THROW(load_rule(entry.path())) << entry.path();
        ++count;
    }
    EXPECT_GE(count, 15U);
}

}  // namespace
}  // namespace puqca
