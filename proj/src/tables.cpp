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

#include "puqca/tables.hpp"

#include <stdexcept>

#include <json.hpp>

#include "puqca/reference_tables_data.hpp"
#include "puqca/rule_io.hpp"

namespace puqca {

using nlohmann::json;

FermionRule SimulableAngles::as_fermion_rule() const { return {theta1, xi1, third1, theta2, xi2, third2}; }

PuqcaRule SimulableAngles::as_alpha_rule() const {
    return {GateParams(theta1, third1, 0.0, xi1), GateParams(theta2, third2, 0.0, xi2)};
}

const TableFamily &ReferenceTables::family(std::string_view id) const {
    for (const auto &f : families) {
        if (f.id == id) return f;
    }
    throw std::out_of_range("unknown table family '" + std::string(id) + "'");
}

namespace {

FamilyKind parse_kind(const std::string &kind) {
    if (kind == "bound") return FamilyKind::bound;
    if (kind == "full") return FamilyKind::full;
    if (kind == "simulable") return FamilyKind::simulable;
    if (kind == "translation") return FamilyKind::translation;
    throw std::runtime_error("unknown table kind '" + kind + "'");
}

SimulableAngles parse_simulable(const json &j) {
    SimulableAngles s;
    s.theta1 = j.at("theta1").get<double>();
    s.xi1 = j.at("xi1").get<double>();
    s.third1 = j.at("third1").get<double>();
    s.theta2 = j.at("theta2").get<double>();
    s.xi2 = j.at("xi2").get<double>();
    s.third2 = j.at("third2").get<double>();
    s.label = j.value("label", "");
    return s;
}

TableRow parse_row(const json &j, FamilyKind kind) {
    TableRow row;
    row.n = j.at("n").get<int>();
    row.t = j.value("t", 0);
    row.p = j.value("p", 0);
    row.delta = j.value("delta", 0.0);
    row.expected = j.value("expected", 1.0);
    if (j.contains("failures")) row.failures = j.at("failures").get<std::size_t>();
    if (kind == FamilyKind::full || kind == FamilyKind::translation) {
        const auto file = parse_rule(j.at("rule").dump());
        row.rule = std::get<PuqcaRule>(file.rule);
        row.label = file.label;
    } else if (kind == FamilyKind::simulable) {
        auto angles = parse_simulable(j.at("rule"));
        row.label = angles.label;
        row.rule = std::move(angles);
    }
    if (kind == FamilyKind::translation) {
        row.input = j.at("input").get<std::string>();
        row.shifted = j.at("shifted").get<std::string>();
    }
    return row;
}

}  // namespace

ReferenceTables parse_reference_tables(std::string_view json_text) {
    try {
        const json doc = json::parse(json_text);
        ReferenceTables tables;
        tables.version = doc.at("version").get<int>();
        tables.tolerance = doc.at("tolerance").get<double>();
        for (const auto &f : doc.at("families")) {
            TableFamily family;
            family.id = f.at("id").get<std::string>();
            family.kind = parse_kind(f.at("kind").get<std::string>());
            for (const auto &r : f.at("rows")) family.rows.push_back(parse_row(r, family.kind));
            tables.families.push_back(std::move(family));
        }
        return tables;
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("malformed reference tables: ") + e.what());
    }
}

const ReferenceTables &reference_tables() {
    static const ReferenceTables tables = parse_reference_tables(detail::kReferenceTablesJson);
    return tables;
}

}  // namespace puqca
