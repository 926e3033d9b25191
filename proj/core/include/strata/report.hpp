// Copyright 2026 The Strata Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STRATA_REPORT_HPP
#define STRATA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strata/splitting.hpp"
#include "strata/theory.hpp"

namespace strata
{

enum class Color { black, blue, red, grey };

std::string to_string(Color color);

/// BLACK: non-empty, expected dimension, irreducible. BLUE: expected dimension but
/// reducible. RED: anomalous, or an open stratum deduced empty. GREY: expected to be
/// empty and empty (only shown with include_empty).
Color color_of(const StratumReport &report);

/// The class coefficient when the closure occurs in the expected dimension and is
/// non-empty.
std::optional<ClassCoefficient> reported_class(const StratumReport &report);

struct ReportEntry {
    StratumReport stratum;
    std::optional<ClassCoefficient> class_coefficient;
    Color color = Color::black;

    friend bool operator==(const ReportEntry &, const ReportEntry &) = default;
};

/// A materialized, canonically sorted stratification: entries ordered by display
/// dimension descending, then by type; edges are covering relations of the full
/// universe with both ends among the entries.
struct Report {
    TrigonalContext context;
    std::vector<ReportEntry> entries;
    std::vector<Edge> edges;

    friend bool operator==(const Report &, const Report &) = default;
};

struct ReportOptions {
    bool include_empty = false;
    std::optional<std::int64_t> min_dim;
    std::optional<std::int64_t> max_dim;
    std::optional<std::int64_t> spread_bound; // default g + 2
};

/// A stratum is shown by default when something in it is non-empty: a certified
/// open stratum or a non-empty closure.
bool is_visible(const StratumReport &report);

Report build_report(const TrigonalContext &ctx, const ReportOptions &options = {});

/// Cross-checks every stratum in the report against an independent route (identities,
/// Phi oracle, dominance of edges). Throws ConsistencyError on the first mismatch.
void verify_consistency(const Report &report);

struct NodeAnnotation {
    Color color = Color::black;
    std::int64_t rank = 0;
    bool ghost = false;

    friend bool operator==(const NodeAnnotation &, const NodeAnnotation &) = default;
};

struct DiagramNode {
    SplittingType type;
    NodeAnnotation display;
};

/// Nodes carry the display annotation; a RED node whose actual dimension differs
/// from the expected one is accompanied by a GREY ghost at the expected rank.
struct HasseDiagram {
    std::vector<DiagramNode> nodes;
    std::vector<Edge> edges;
};

HasseDiagram build_diagram(const Report &report);

std::string emit_json(const Report &report);
/// Throws ValidationError on malformed documents.
Report parse_json(std::string_view text);
std::string emit_text(const Report &report);
std::string emit_dot(const HasseDiagram &diagram);

std::string emit_stratum_json(const TrigonalContext &ctx, const StratumReport &stratum);
std::string emit_stratum_text(const TrigonalContext &ctx, const StratumReport &stratum);

struct OracleCheckOptions {
    std::int64_t max_genus = 20;
    // Test hook: drops the lowest m from the closed-form window so the sweep must fail.
    bool fault_drop_window_start = false;
};

struct OracleCheckCase {
    std::int64_t genus = 0;
    std::int64_t maroni = 0;
    SplittingType type;
    std::int64_t alpha = 0;
    BigInt formula;
    BigInt oracle;
    bool equidimensional = true;
    // Connected when alpha >= 1; no edges at all when alpha = 0.
    bool adjacency_ok = true;
    [[nodiscard]] bool passed() const;
};

struct OracleCheckSummary {
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t connectivity_checked = 0;
    std::vector<OracleCheckCase> failures;

    [[nodiscard]] bool ok() const noexcept
    {
        return failures.empty();
    }
};

/// Sweeps every valid (g <= max_genus, n) and every flavor-III type with
/// 0 <= alpha <= n - 1 (one representative per twist class, degrees 0, 1, 2) and
/// compares the closed-form count with the Phi oracle.
OracleCheckSummary run_oracle_check(const OracleCheckOptions &options);

} // namespace strata

#endif
