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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "puqca/model.hpp"

namespace puqca {

class RuleParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Current rule-file schema version.
inline constexpr int kRuleSchema = 1;

/// A rule file holds either an eight-angle rule ("kind": "full") or a six-angle free-fermion
/// rule ("kind": "fermionic"). Optional "label" and "source" strings are carried through.
///
/// full:      {"schema": 1, "kind": "full",
///             "w0": {"theta", "alpha", "gamma", "xi", ["phi"]}, "w1": {...}}
/// fermionic: {"schema": 1, "kind": "fermionic",
///             "theta1", "xi1", "gamma1", "theta2", "xi2", "gamma2"}
struct RuleFile {
    std::variant<PuqcaRule, FermionRule> rule;
    std::string label;
    std::string source;

    bool is_fermionic() const { return std::holds_alternative<FermionRule>(rule); }
};

RuleFile parse_rule(std::string_view text);
std::string serialize_rule(const RuleFile &file);

RuleFile load_rule(const std::filesystem::path &path);
void save_rule(const std::filesystem::path &path, const RuleFile &file);

}  // namespace puqca
