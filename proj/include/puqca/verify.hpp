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
#include <string>
#include <vector>

#include "puqca/dct.hpp"
#include "puqca/fermion.hpp"
#include "puqca/tables.hpp"

namespace puqca {

enum class ThirdAngle { gamma, alpha };

/// One reading of the conventions a reference table may have used.
struct Variant {
    LayerOrder order = LayerOrder::even_first;
    int site_offset = 0;           // readout site is (p + site_offset) mod n
    bool swapped_factors = false;  // gate basis with the higher lattice index as left factor
    bool reversed_shift = false;   // translation moves bits toward higher indices
    ThirdAngle third = ThirdAngle::gamma;
    FermionBoundary boundary = FermionBoundary::periodic;

    /// "default" or a '+'-joined list of the non-default choices.
    std::string name() const;
};

/// Gate with its two tensor factors exchanged (SWAP · W · SWAP), expressed in the same angles.
GateParams swap_factors(const GateParams &g);

/// The finite variant set of a family kind; the default variant is always first.
std::vector<Variant> variants_for(FamilyKind kind);

enum class ConventionMode { fixed, search };

struct VerifyOptions {
    ConventionMode mode = ConventionMode::fixed;
    Engine engine = Engine::sector;
    std::vector<std::string> families;  // empty: every family
};

struct ReportRow {
    std::string table;
    int n = 0;
    int t = 0;
    int p = 0;
    double expected = 0.0;
    double computed = 0.0;
    bool match = false;
    std::string variant;
};

struct FamilyResult {
    std::string id;
    bool passed = false;
    std::string variant;  // the matching variant, or "none"
    std::string closest;  // when none matches: variant whose rows are reported
    std::size_t variants_tried = 0;
    std::vector<ReportRow> rows;
};

struct VerificationReport {
    std::vector<FamilyResult> families;

    bool passed() const;
    /// Header `table,n,t,p,expected,computed,match,variant`, 17 significant digits.
    std::string csv() const;
};

/// Round-trip decimal form (17 significant digits).
std::string format_real(double x);

/// Recomputes one row under a variant. Rows of the translation family yield one entry per check.
std::vector<ReportRow> evaluate_row(const TableFamily &family, const TableRow &row, const Variant &variant,
                                    double tolerance, Engine engine = Engine::sector);

/// Every row of a family under the default variant; in search mode, on failure, each other
/// variant is tried (stopping at its first mismatching row) until one matches every row.
FamilyResult verify_family(const TableFamily &family, double tolerance, const VerifyOptions &options = {});

VerificationReport verify_tables(const ReferenceTables &tables, const VerifyOptions &options = {});

}  // namespace puqca
