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

#include "puqca/rule_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace puqca {

using nlohmann::json;

namespace {

void require_keys(const json &obj, std::string_view where, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
    if (!obj.is_object()) {
        throw RuleParseError(std::string(where) + ": expected an object");
    }
    std::set<std::string, std::less<>> allowed;
    for (auto k : required) allowed.emplace(k);
    for (auto k : optional) allowed.emplace(k);
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw RuleParseError(std::string(where) + ": unknown key '" + key + "'");
        }
    }
    for (auto k : required) {
        if (!obj.contains(std::string(k))) {
            throw RuleParseError(std::string(where) + ": missing key '" + std::string(k) + "'");
        }
    }
}

double angle(const json &obj, const std::string &key, std::string_view where) {
    const auto &v = obj.at(key);
    if (!v.is_number()) {
        throw RuleParseError(std::string(where) + "." + key + ": expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw RuleParseError(std::string(where) + "." + key + ": must be finite");
    }
    return x;
}

std::string text_field(const json &obj, const std::string &key) {
    if (!obj.contains(key)) return {};
    if (!obj.at(key).is_string()) {
        throw RuleParseError(key + ": expected a string");
    }
    return obj.at(key).get<std::string>();
}

GateParams parse_gate(const json &obj, std::string_view where) {
    require_keys(obj, where, {"theta", "alpha", "gamma", "xi"}, {"phi"});
    const double phi = obj.contains("phi") ? angle(obj, "phi", where) : 0.0;
    return {angle(obj, "theta", where), angle(obj, "alpha", where), angle(obj, "gamma", where),
            angle(obj, "xi", where), phi};
}

json gate_json(const GateParams &g) {
    json j = {{"theta", g.theta()}, {"alpha", g.alpha()}, {"gamma", g.gamma()}, {"xi", g.xi()}};
    if (g.phi() != 0.0) j["phi"] = g.phi();
    return j;
}

}  // namespace

RuleFile parse_rule(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw RuleParseError(std::string("malformed rule file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
        throw RuleParseError("rule file needs a string 'kind'");
    }
    if (!doc.contains("schema") || !doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != kRuleSchema) {
        throw RuleParseError("unsupported rule schema (expected " + std::to_string(kRuleSchema) + ")");
    }

    RuleFile file;
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "full") {
        require_keys(doc, "rule", {"schema", "kind", "w0", "w1"}, {"label", "source"});
        file.rule = PuqcaRule{parse_gate(doc.at("w0"), "w0"), parse_gate(doc.at("w1"), "w1")};
    } else if (kind == "fermionic") {
        require_keys(doc, "rule", {"schema", "kind", "theta1", "xi1", "gamma1", "theta2", "xi2", "gamma2"},
                     {"label", "source"});
        file.rule = FermionRule(angle(doc, "theta1", "rule"), angle(doc, "xi1", "rule"), angle(doc, "gamma1", "rule"),
                                angle(doc, "theta2", "rule"), angle(doc, "xi2", "rule"), angle(doc, "gamma2", "rule"));
    } else {
        throw RuleParseError("unknown rule kind '" + kind + "'");
    }
    file.label = text_field(doc, "label");
    file.source = text_field(doc, "source");
    return file;
}

std::string serialize_rule(const RuleFile &file) {
    json doc = {{"schema", kRuleSchema}};
    if (const auto *r = std::get_if<PuqcaRule>(&file.rule)) {
        doc["kind"] = "full";
        doc["w0"] = gate_json(r->w0);
        doc["w1"] = gate_json(r->w1);
    } else {
        const auto &f = std::get<FermionRule>(file.rule);
        doc["kind"] = "fermionic";
        doc["theta1"] = f.theta1();
        doc["xi1"] = f.xi1();
        doc["gamma1"] = f.gamma1();
        doc["theta2"] = f.theta2();
        doc["xi2"] = f.xi2();
        doc["gamma2"] = f.gamma2();
    }
    if (!file.label.empty()) doc["label"] = file.label;
    if (!file.source.empty()) doc["source"] = file.source;
    return doc.dump(2) + "\n";
}

RuleFile load_rule(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw RuleParseError("cannot open rule file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rule(buf.str());
}

void save_rule(const std::filesystem::path &path, const RuleFile &file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write rule file " + path.string());
    }
    out << serialize_rule(file);
}

}  // namespace puqca
