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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "puqca/model.hpp"

namespace puqca {

/// Six angles of a simulable-regime rule whose third angle per layer is stored as printed;
/// it may be read as γ (phase of b) or α.
struct SimulableAngles {
    double theta1 = 0.0, xi1 = 0.0, third1 = 0.0;
    double theta2 = 0.0, xi2 = 0.0, third2 = 0.0;
    std::string label;

    /// Third angle read as γ.
    FermionRule as_fermion_rule() const;
    /// Third angle read as α, with γ = 0.
    PuqcaRule as_alpha_rule() const;
};

enum class FamilyKind { bound, full, simulable, translation };

struct TableRow {
    int n = 0;
    int t = 0;
    int p = 0;
    double delta = 0.0;
    double expected = 0.0;
    std::optional<std::size_t> failures;  // exact misclassification count, when known
    std::variant<std::monostate, PuqcaRule, SimulableAngles> rule;
    std::string label;
    std::string input;    // translation family only
    std::string shifted;  // translation family only
};

struct TableFamily {
    std::string id;
    FamilyKind kind = FamilyKind::bound;
    std::vector<TableRow> rows;
};

struct ReferenceTables {
    int version = 0;
    double tolerance = 0.0;
    std::vector<TableFamily> families;

    /// Throws std::out_of_range for an unknown id.
    const TableFamily &family(std::string_view id) const;
};

ReferenceTables parse_reference_tables(std::string_view json_text);

/// Tables compiled into the library, parsed on first use.
const ReferenceTables &reference_tables();

}  // namespace puqca
