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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "strata/error.hpp"
#include "strata/report.hpp"
#include "strata/theory.hpp"

namespace strata::cli
{

namespace
{

struct CurveFlags {
    std::int64_t genus = 0;
    std::int64_t maroni = 0;
    bool general = true;
};

void add_curve_flags(CLI::App &cmd, CurveFlags &flags)
{
    cmd.add_option("-g,--genus", flags.genus, "Genus of the trigonal curve")->required();
    cmd.add_option("-n,--maroni", flags.maroni, "Maroni invariant")->required();
    cmd.add_flag("--general,!--no-general", flags.general,
                 "Treat the curve as general of its Maroni invariant (default on)");
}

int write_output(const std::string &document, const std::string &path, std::ostream &out, std::ostream &err)
{
    if (path.empty()) {
        out << document;
        return exit_ok;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return exit_invalid;
    }
    file << document;
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Refined Brill-Noether stratification of trigonal curves", "strata"};
    app.require_subcommand(1);

    CurveFlags report_curve;
    std::int64_t report_degree = 0;
    std::string report_format = "text";
    bool include_empty = false;
    std::optional<std::int64_t> min_dim;
    std::optional<std::int64_t> max_dim;
    std::optional<std::int64_t> spread_bound;
    std::string out_path;
    auto *report_cmd = app.add_subcommand("report", "Classify every splitting stratum for a degree");
    add_curve_flags(*report_cmd, report_curve);
    report_cmd->add_option("-d,--degree", report_degree, "Degree of the line bundles")->required();
    report_cmd->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    report_cmd->add_flag("--include-empty", include_empty, "Also list strata known to be empty");
    report_cmd->add_option("--min-dim", min_dim, "Drop strata drawn below this dimension");
    report_cmd->add_option("--max-dim", max_dim, "Drop strata drawn above this dimension");
    report_cmd->add_option("--spread-bound", spread_bound, "Largest c - a enumerated (default g + 2)");
    report_cmd->add_option("--out", out_path, "Write the document to FILE instead of stdout");

    CurveFlags classify_curve;
    std::string type_text;
    std::string classify_format = "text";
    auto *classify_cmd = app.add_subcommand("classify", "Classify a single splitting type");
    add_curve_flags(*classify_cmd, classify_curve);
    classify_cmd->add_option("-t,--type", type_text, "Splitting type, e.g. \"-8,-4,-1\"")->required();
    classify_cmd->add_option("--format", classify_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::int64_t max_genus = 20;
    bool inject_fault = false;
    auto *oracle_cmd = app.add_subcommand("oracle-check", "Compare component counts with the Phi oracle");
    oracle_cmd->add_option("--max-genus", max_genus, "Largest genus swept")->check(CLI::Range(0, 60));
    oracle_cmd->add_flag("--inject-fault", inject_fault)->group("");

    std::int64_t bn_genus = 0;
    std::int64_t bn_degree = 0;
    std::int64_t bn_rank = 1;
    auto *bn_cmd = app.add_subcommand("bn", "Components of W^r_d for a trigonal curve");
    bn_cmd->add_option("-g,--genus", bn_genus, "Genus")->required();
    bn_cmd->add_option("-d,--degree", bn_degree, "Degree")->required();
    bn_cmd->add_option("-r,--rank", bn_rank, "Projective dimension r")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << '\n';
        return exit_invalid;
    }

    try {
        if (report_cmd->parsed()) {
            const auto ctx = make_context(report_curve.genus, report_curve.maroni, report_degree, report_curve.general);
            ReportOptions options{include_empty, min_dim, max_dim, spread_bound};
            if (spread_bound && *spread_bound < 0) {
                throw ValidationError("--spread-bound must be non-negative");
            }
            const auto report = build_report(ctx, options);
            verify_consistency(report);
            std::string document;
            if (report_format == "json") {
                document = emit_json(report);
            } else if (report_format == "dot") {
                document = emit_dot(build_diagram(report));
            } else {
                document = emit_text(report);
            }
            return write_output(document, out_path, out, err);
        }

        if (classify_cmd->parsed()) {
            const auto e = parse_splitting_type(type_text);
            if (e.rank() != 3) {
                throw ValidationError("trigonal splitting types have three entries, got " + e.to_string());
            }
            const auto ctx = make_context(classify_curve.genus, classify_curve.maroni,
                                          degree_of(classify_curve.genus, e), classify_curve.general);
            const auto stratum = classify(ctx, e);
            out << (classify_format == "json" ? emit_stratum_json(ctx, stratum) : emit_stratum_text(ctx, stratum));
            return exit_ok;
        }

        if (oracle_cmd->parsed()) {
            const auto summary = run_oracle_check({max_genus, inject_fault});
            out << "oracle-check up to genus " << max_genus << ": " << summary.cases << " cases, " << summary.passed
                << " passed, " << summary.failures.size() << " failed (" << summary.connectivity_checked
                << " connectivity checks)\n";
            for (const auto &f : summary.failures) {
                out << "FAIL g=" << f.genus << " n=" << f.maroni << " type=" << f.type << " alpha=" << f.alpha
                    << " formula=" << to_string(f.formula) << " oracle=" << to_string(f.oracle)
                    << (f.equidimensional ? "" : " not-equidimensional") << (f.adjacency_ok ? "" : " adjacency")
                    << '\n';
            }
            return summary.ok() ? exit_ok : exit_inconsistent;
        }

        if (bn_cmd->parsed()) {
            const auto bn = bn_components(bn_genus, bn_degree, bn_rank);
            out << "W^" << bn.r << "_" << bn.d << " on a trigonal curve of genus " << bn.g << ": rho = " << bn.rho
                << '\n';
            for (const auto &component : bn.components) {
                out << "  closure of " << component.type << ": dimension " << component.dimension << '\n';
            }
            return exit_ok;
        }
    } catch (const ConsistencyError &ex) {
        err << "internal consistency failure: " << ex.what() << '\n';
        return exit_inconsistent;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}

} // namespace strata::cli
