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

#include "strata/report.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "strata/error.hpp"
#include "strata/phi_oracle.hpp"

namespace strata
{

using ordered_json = nlohmann::ordered_json;

std::string to_string(Color color)
{
    switch (color) {
        case Color::black:
            return "BLACK";
        case Color::blue:
            return "BLUE";
        case Color::red:
            return "RED";
        case Color::grey:
            return "GREY";
    }
    return "?";
}

namespace
{

bool closure_nonempty(const StratumReport &report)
{
    return report.closure_status == ClosureStatus::point || report.closure_status == ClosureStatus::irreducible;
}

bool reducible(const StratumReport &report)
{
    return (report.component_count && *report.component_count > 1) || (report.point_count && *report.point_count > 1);
}

} // namespace

Color color_of(const StratumReport &report)
{
    if (report.anomalous || report.empty_witness) {
        return Color::red;
    }
    if (!report.certified_nonempty() && !closure_nonempty(report)) {
        return Color::grey;
    }
    return reducible(report) ? Color::blue : Color::black;
}

std::optional<ClassCoefficient> reported_class(const StratumReport &report)
{
    if (report.anomalous || !(report.certified_nonempty() || closure_nonempty(report))) {
        return std::nullopt;
    }
    return class_coefficient(report.e);
}

bool is_visible(const StratumReport &report)
{
    return report.certified_nonempty() || closure_nonempty(report);
}

Report build_report(const TrigonalContext &ctx, const ReportOptions &options)
{
    const auto bound = options.spread_bound.value_or(default_spread_bound(ctx.genus()));
    const auto universe = classify_universe(ctx, bound);

    Report report{ctx, {}, {}};
    std::set<SplittingType> kept;
    for (const auto &stratum : universe) {
        if (!options.include_empty && !is_visible(stratum)) {
            continue;
        }
        const auto dim = stratum.display_dim();
        if ((options.min_dim && dim < *options.min_dim) || (options.max_dim && dim > *options.max_dim)) {
            continue;
        }
        report.entries.push_back({stratum, reported_class(stratum), color_of(stratum)});
        kept.insert(stratum.e);
    }
    std::sort(report.entries.begin(), report.entries.end(), [](const ReportEntry &x, const ReportEntry &y) {
        const auto dx = x.stratum.display_dim();
        const auto dy = y.stratum.display_dim();
        return dx != dy ? dx > dy : x.stratum.e < y.stratum.e;
    });

    std::vector<SplittingType> types;
    types.reserve(universe.size());
    for (const auto &stratum : universe) {
        types.push_back(stratum.e);
    }
    for (auto &edge : hasse_edges(types)) {
        if (kept.contains(edge.first) && kept.contains(edge.second)) {
            report.edges.push_back(std::move(edge));
        }
    }
    return report;
}

void verify_consistency(const Report &report)
{
    const auto &ctx = report.context;
    const auto n = ctx.maroni();
    auto fail = [](const std::string &what) { throw ConsistencyError(what); };

    if (!canonical_degree_check(ctx.md)) {
        fail("canonical degree check failed");
    }
    if (directrix_points(ctx.md) != intersect(n, curve_class(ctx.md), directrix_class)) {
        fail("directrix count disagrees with E.C");
    }
    for (const auto &entry : report.entries) {
        const auto &s = entry.stratum;
        const auto &e = s.e;
        if (e.sum() != ctx.stratum_sum()) {
            fail(e.to_string() + " violates the degree constraint");
        }
        if (s.flavor == Flavor::I && e.c() > e.b() && s.expected_codim != 2 * e.c() - e.a() - e.b() - 2) {
            fail(e.to_string() + ": u differs from 2c - a - b - 2");
        }
        if (s.flavor == Flavor::II && e.b() > e.a() && s.expected_codim != e.b() + e.c() - 2 * e.a() - 2) {
            fail(e.to_string() + ": u differs from b + c - 2a - 2");
        }
        if (h0_split(e) - h1_split(e) != e.sum() + 3) {
            fail(e.to_string() + ": Riemann-Roch on the projective line fails");
        }
        if (s.flavor != Flavor::III) {
            continue;
        }
        const auto alpha = *s.alpha;
        if (2 * alpha - n + 1 != s.expected_dim) {
            fail(e.to_string() + ": 2 alpha - n + 1 differs from g - u");
        }
        if (alpha < 0 || alpha >= n) {
            continue;
        }
        const auto p = phi::params(ctx, e);
        if (p.deg_d + p.deg_d_prime != p.base_points + 3 * p.alpha) {
            fail(e.to_string() + ": Phi degree bookkeeping fails");
        }
        if (p.base_points > phi::max_base_points) {
            continue;
        }
        const auto components = phi::enumerate_components(p);
        BigInt formula = 0;
        if (s.point_count) {
            formula = *s.point_count;
        } else if (s.component_count) {
            formula = *s.component_count;
        }
        if (BigInt(components.size()) != formula) {
            fail(e.to_string() + ": closed-form count " + to_string(formula) + " but oracle finds "
                 + std::to_string(components.size()));
        }
        if (alpha >= 1 && !components.empty() && !phi::is_connected(phi::adjacency_graph(components))) {
            fail(e.to_string() + ": oracle components are not connected");
        }
    }
    for (const auto &[low, high] : report.edges) {
        if (low == high || !dominance_leq(low, high)) {
            fail("edge " + low.to_string() + " -> " + high.to_string() + " is not a strict specialization");
        }
    }
}

HasseDiagram build_diagram(const Report &report)
{
    HasseDiagram diagram;
    std::vector<DiagramNode> ghosts;
    for (const auto &entry : report.entries) {
        const auto &s = entry.stratum;
        diagram.nodes.push_back({s.e, {entry.color, s.display_dim(), false}});
        if (entry.color == Color::red && s.display_dim() != s.expected_dim) {
            ghosts.push_back({s.e, {Color::grey, s.expected_dim, true}});
        }
    }
    diagram.nodes.insert(diagram.nodes.end(), ghosts.begin(), ghosts.end());
    diagram.edges = report.edges;
    return diagram;
}

// JSON ---------------------------------------------------------------------------------

namespace
{

ordered_json big_to_json(const BigInt &value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

BigInt big_from_json(const ordered_json &j)
{
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    throw ValidationError("expected an integer or a decimal string, got " + j.dump());
}

ordered_json type_to_json(const SplittingType &e)
{
    auto out = ordered_json::array();
    for (const auto x : e.entries()) {
        out.push_back(x);
    }
    return out;
}

SplittingType type_from_json(const ordered_json &j)
{
    if (!j.is_array()) {
        throw ValidationError("splitting type must be an array, got " + j.dump());
    }
    return SplittingType(j.get<std::vector<std::int64_t>>());
}

template <typename Enum, std::size_t N>
Enum enum_from_string(const std::string &text, const Enum (&values)[N], const char *what)
{
    for (const auto v : values) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw ValidationError(std::string("unknown ") + what + " '" + text + "'");
}

ordered_json stratum_to_json(const StratumReport &s)
{
    ordered_json j;
    j["type"] = type_to_json(s.e);
    j["flavor"] = to_string(s.flavor);
    if (s.alpha) {
        j["alpha"] = *s.alpha;
    }
    j["expected_codim"] = s.expected_codim;
    j["expected_dim"] = s.expected_dim;

    ordered_json closure;
    closure["status"] = to_string(s.closure_status);
    if (s.closure_dim) {
        closure["dim"] = *s.closure_dim;
    }
    j["closure"] = closure;

    ordered_json open;
    open["status"] = to_string(s.open_status);
    if (s.open_dim) {
        open["dim"] = *s.open_dim;
    }
    if (s.component_count) {
        open["components"] = big_to_json(*s.component_count);
    }
    if (s.point_count) {
        open["points"] = big_to_json(*s.point_count);
    }
    open["generality"] = to_string(s.generality);
    if (s.empty_witness) {
        open["witness"] = type_to_json(*s.empty_witness);
    }
    j["open"] = open;
    j["anomalous"] = s.anomalous;
    return j;
}

template <typename T>
std::optional<T> optional_field(const ordered_json &j, const char *key)
{
    if (auto it = j.find(key); it != j.end()) {
        return it->get<T>();
    }
    return std::nullopt;
}

StratumReport stratum_from_json(const ordered_json &j)
{
    static constexpr Flavor flavors[] = {Flavor::I, Flavor::II, Flavor::III};
    static constexpr ClosureStatus closures[] = {ClosureStatus::empty, ClosureStatus::point,
                                                 ClosureStatus::irreducible, ClosureStatus::unresolved};
    static constexpr OpenStatus opens[] = {OpenStatus::empty, OpenStatus::finite, OpenStatus::irreducible,
                                           OpenStatus::connected_reducible, OpenStatus::unknown};
    static constexpr Generality generalities[] = {Generality::all_curves, Generality::general_maroni_n};

    StratumReport s{.e = type_from_json(j.at("type"))};
    s.flavor = enum_from_string(j.at("flavor").get<std::string>(), flavors, "flavor");
    s.alpha = optional_field<std::int64_t>(j, "alpha");
    s.expected_codim = j.at("expected_codim").get<std::int64_t>();
    s.expected_dim = j.at("expected_dim").get<std::int64_t>();

    const auto &closure = j.at("closure");
    s.closure_status = enum_from_string(closure.at("status").get<std::string>(), closures, "closure status");
    s.closure_dim = optional_field<std::int64_t>(closure, "dim");

    const auto &open = j.at("open");
    s.open_status = enum_from_string(open.at("status").get<std::string>(), opens, "open status");
    s.open_dim = optional_field<std::int64_t>(open, "dim");
    if (auto it = open.find("components"); it != open.end()) {
        s.component_count = big_from_json(*it);
    }
    if (auto it = open.find("points"); it != open.end()) {
        s.point_count = big_from_json(*it);
    }
    s.generality = enum_from_string(open.at("generality").get<std::string>(), generalities, "generality");
    if (auto it = open.find("witness"); it != open.end()) {
        s.empty_witness = type_from_json(*it);
    }
    s.anomalous = j.at("anomalous").get<bool>();
    return s;
}

ordered_json context_to_json(const TrigonalContext &ctx)
{
    ordered_json j;
    j["genus"] = ctx.genus();
    j["maroni"] = ctx.maroni();
    j["degree"] = ctx.degree;
    j["general_curve"] = ctx.general_curve;
    return j;
}

} // namespace

std::string emit_json(const Report &report)
{
    ordered_json doc;
    doc["version"] = "v1";
    doc["context"] = context_to_json(report.context);
    auto strata = ordered_json::array();
    for (const auto &entry : report.entries) {
        auto j = stratum_to_json(entry.stratum);
        if (entry.class_coefficient) {
            ordered_json cls;
            cls["multiplier"] = big_to_json(entry.class_coefficient->multiplier);
            cls["theta_power"] = entry.class_coefficient->theta_power;
            j["class"] = cls;
        }
        j["color"] = to_string(entry.color);
        strata.push_back(std::move(j));
    }
    doc["strata"] = std::move(strata);
    auto edges = ordered_json::array();
    for (const auto &[low, high] : report.edges) {
        edges.push_back(ordered_json::array({type_to_json(low), type_to_json(high)}));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

Report parse_json(std::string_view text)
{
    static constexpr Color colors[] = {Color::black, Color::blue, Color::red, Color::grey};
    try {
        const auto doc = ordered_json::parse(text);
        if (doc.value("version", std::string{}) != "v1") {
            throw ValidationError("unsupported report version");
        }
        const auto &c = doc.at("context");
        Report report{make_context(c.at("genus").get<std::int64_t>(), c.at("maroni").get<std::int64_t>(),
                                   c.at("degree").get<std::int64_t>(), c.at("general_curve").get<bool>()),
                      {},
                      {}};
        for (const auto &j : doc.at("strata")) {
            ReportEntry entry{stratum_from_json(j), std::nullopt, Color::black};
            if (auto it = j.find("class"); it != j.end()) {
                entry.class_coefficient =
                    ClassCoefficient{big_from_json(it->at("multiplier")), it->at("theta_power").get<std::int64_t>()};
            }
            entry.color = enum_from_string(j.at("color").get<std::string>(), colors, "color");
            report.entries.push_back(std::move(entry));
        }
        for (const auto &edge : doc.at("edges")) {
            report.edges.emplace_back(type_from_json(edge.at(0)), type_from_json(edge.at(1)));
        }
        return report;
    } catch (const nlohmann::json::exception &ex) {
        throw ValidationError(std::string("malformed report document: ") + ex.what());
    }
}

std::string emit_stratum_json(const TrigonalContext &ctx, const StratumReport &stratum)
{
    ordered_json doc;
    doc["version"] = "v1";
    doc["context"] = context_to_json(ctx);
    auto j = stratum_to_json(stratum);
    if (auto cls = reported_class(stratum)) {
        j["class"] = {{"multiplier", big_to_json(cls->multiplier)}, {"theta_power", cls->theta_power}};
    }
    j["color"] = to_string(color_of(stratum));
    doc["stratum"] = std::move(j);
    return doc.dump(2) + "\n";
}

// Text ---------------------------------------------------------------------------------

namespace
{

std::string opt_to_string(const std::optional<std::int64_t> &value)
{
    return value ? std::to_string(*value) : "-";
}

std::string count_cell(const StratumReport &s)
{
    if (s.point_count) {
        return to_string(*s.point_count) + " pt";
    }
    if (s.component_count) {
        return to_string(*s.component_count) + " comp";
    }
    return "-";
}

void text_row(std::ostream &os, const StratumReport &s, Color color)
{
    os << std::left << std::setw(16) << s.e.to_string() << std::setw(5) << to_string(s.flavor) << std::right
       << std::setw(6) << opt_to_string(s.alpha) << std::setw(5) << s.expected_codim << std::setw(8) << s.expected_dim
       << "  " << std::left << std::setw(12) << to_string(s.closure_status) << std::right << std::setw(4)
       << opt_to_string(s.closure_dim) << "  " << std::left << std::setw(20) << to_string(s.open_status) << std::right
       << std::setw(4) << opt_to_string(s.open_dim) << "  " << std::left << std::setw(12) << count_cell(s)
       << std::setw(18) << to_string(s.generality) << std::setw(6) << to_string(color);
    if (s.empty_witness) {
        os << " empty via " << s.empty_witness->to_string();
    }
    os << '\n';
}

void text_header(std::ostream &os)
{
    os << std::left << std::setw(16) << "type" << std::setw(5) << "fl" << std::right << std::setw(6) << "alpha"
       << std::setw(5) << "u" << std::setw(8) << "exp.dim" << "  " << std::left << std::setw(12) << "closure"
       << std::right << std::setw(4) << "dim" << "  " << std::left << std::setw(20) << "open" << std::right
       << std::setw(4) << "dim" << "  " << std::left << std::setw(12) << "count" << std::setw(18) << "generality"
       << std::setw(6) << "color" << '\n';
}

} // namespace

std::string emit_text(const Report &report)
{
    std::ostringstream os;
    const auto &ctx = report.context;
    os << "genus " << ctx.genus() << ", Maroni invariant " << ctx.maroni() << ", degree " << ctx.degree
       << " (strata sum " << ctx.stratum_sum() << ")" << (ctx.general_curve ? ", general curve" : "") << "\n\n";
    text_header(os);
    for (const auto &entry : report.entries) {
        text_row(os, entry.stratum, entry.color);
    }
    os << "\ncovering relations (" << report.edges.size() << "):\n";
    for (const auto &[low, high] : report.edges) {
        os << "  " << low << " -> " << high << '\n';
    }
    return os.str();
}

std::string emit_stratum_text(const TrigonalContext &ctx, const StratumReport &stratum)
{
    std::ostringstream os;
    os << "genus " << ctx.genus() << ", Maroni invariant " << ctx.maroni() << ", degree " << ctx.degree << "\n\n";
    text_header(os);
    text_row(os, stratum, color_of(stratum));
    if (auto cls = reported_class(stratum)) {
        os << "\nclass: " << to_string(cls->multiplier) << " theta^" << cls->theta_power << " / " << cls->theta_power
           << "!\n";
    }
    return os.str();
}

// DOT ----------------------------------------------------------------------------------

namespace
{

std::string dot_color(Color color)
{
    switch (color) {
        case Color::black:
            return "black";
        case Color::blue:
            return "blue";
        case Color::red:
            return "red";
        case Color::grey:
            return "grey60";
    }
    return "black";
}

std::string node_id(const DiagramNode &node)
{
    return std::string(node.display.ghost ? "ghost " : "") + node.type.to_string();
}

std::string rank_name(std::int64_t rank)
{
    return rank < 0 ? "dim_m" + std::to_string(-rank) : "dim_" + std::to_string(rank);
}

} // namespace

std::string emit_dot(const HasseDiagram &diagram)
{
    std::map<std::int64_t, std::vector<const DiagramNode *>> rows;
    for (const auto &node : diagram.nodes) {
        rows[node.display.rank].push_back(&node);
    }

    std::ostringstream os;
    os << "digraph strata {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=plaintext, fontname=\"Helvetica\"];\n";
    for (const auto &[rank, nodes] : rows) {
        os << "  subgraph " << rank_name(rank) << " {\n";
        os << "    rank=same;\n";
        auto sorted = nodes;
        std::sort(sorted.begin(), sorted.end(), [](const DiagramNode *x, const DiagramNode *y) {
            return std::pair(x->display.ghost, x->type) < std::pair(y->display.ghost, y->type);
        });
        for (const auto *node : sorted) {
            const auto color = dot_color(node->display.color);
            os << "    \"" << node_id(*node) << "\" [label=\"" << node->type.to_string() << "\", color=" << color
               << ", fontcolor=" << color << ", strata_color=" << to_string(node->display.color)
               << ", strata_rank=" << rank << (node->display.ghost ? ", strata_ghost=true" : "") << "];\n";
        }
        os << "  }\n";
    }
    for (const auto &[low, high] : diagram.edges) {
        os << "  \"" << low << "\" -> \"" << high << "\";\n";
    }
    os << "}\n";
    return os.str();
}

// Oracle sweep -------------------------------------------------------------------------

bool OracleCheckCase::passed() const
{
    return formula == oracle && equidimensional && adjacency_ok;
}

OracleCheckSummary run_oracle_check(const OracleCheckOptions &options)
{
    OracleCheckSummary summary;
    for (std::int64_t g = 0; g <= options.max_genus; ++g) {
        for (std::int64_t n = 1; n <= g; ++n) {
            if (!MaroniDatum::is_valid(g, n)) {
                continue;
            }
            for (std::int64_t d = 0; d < 3; ++d) {
                const auto ctx = make_context(g, n, d);
                for (const auto &e : enumerate_types(DegreeDatum{d, g, 3}, default_spread_bound(g))) {
                    if (flavor_of(e) != Flavor::III) {
                        continue;
                    }
                    const auto alpha = alpha_of(ctx, e);
                    if (alpha < 0 || alpha >= n) {
                        continue;
                    }
                    const auto report = classify(ctx, e);
                    const auto p = phi::params(ctx, e);

                    OracleCheckCase result{g, n, e, alpha, 0, 0, true, true};
                    if (report.point_count) {
                        result.formula = *report.point_count;
                    } else if (report.component_count) {
                        result.formula = *report.component_count;
                    }
                    if (options.fault_drop_window_start && report.open_status != OpenStatus::empty) {
                        result.formula -= binomial(p.base_points, std::max<std::int64_t>(0, e.b() - e.a() - n));
                    }

                    const auto components = phi::enumerate_components(p);
                    result.oracle = BigInt(components.size());
                    result.equidimensional = std::all_of(components.begin(), components.end(),
                                                         [&](const phi::Component &c) { return c.dimension() == alpha; });
                    if (!components.empty()) {
                        const auto graph = phi::adjacency_graph(components);
                        if (alpha >= 1) {
                            result.adjacency_ok = phi::is_connected(graph);
                            ++summary.connectivity_checked;
                        } else {
                            result.adjacency_ok = graph.edge_count() == 0;
                        }
                    }

                    ++summary.cases;
                    if (result.passed()) {
                        ++summary.passed;
                    } else {
                        summary.failures.push_back(std::move(result));
                    }
                }
            }
        }
    }
    return summary;
}

} // namespace strata
