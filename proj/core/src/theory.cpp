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

#include "strata/theory.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata
{

namespace
{

void require_stratum(const TrigonalContext &ctx, const SplittingType &e)
{
    if (e.rank() != 3) {
        throw DomainError("trigonal strata have rank 3, got " + e.to_string());
    }
    if (e.sum() != ctx.stratum_sum()) {
        throw DomainError("splitting type " + e.to_string() + " sums to " + std::to_string(e.sum())
                          + " but degree " + std::to_string(ctx.degree) + " requires d - g - 2 = "
                          + std::to_string(ctx.stratum_sum()));
    }
}

// Both gaps at most 1 + (g - n)/2; equivalent to deg D >= alpha and deg D' >= alpha.
bool gaps_fit(const TrigonalContext &ctx, const SplittingType &e)
{
    const auto limit = 1 + (ctx.genus() - ctx.maroni()) / 2;
    return e.c() - e.b() <= limit && e.b() - e.a() <= limit;
}

BigInt component_sum(const TrigonalContext &ctx, const SplittingType &e)
{
    const auto g = ctx.genus();
    const auto n = ctx.maroni();
    const auto base_points = directrix_points(ctx.md);
    const auto lo = std::max<std::int64_t>(0, e.b() - e.a() - n);
    const auto hi = (g - n) / 2 + 1 + e.b() - e.c();
    BigInt total = 0;
    for (auto m = lo; m <= hi; ++m) {
        total += binomial(base_points, m);
    }
    return total;
}

} // namespace

TrigonalContext make_context(std::int64_t genus, std::int64_t maroni, std::int64_t degree, bool general_curve)
{
    return TrigonalContext{MaroniDatum(genus, maroni), degree, general_curve, true};
}

std::int64_t degree_of(std::int64_t genus, const SplittingType &e)
{
    return e.sum() + genus + static_cast<std::int64_t>(e.rank()) - 1;
}

std::string to_string(Flavor flavor)
{
    switch (flavor) {
        case Flavor::I:
            return "I";
        case Flavor::II:
            return "II";
        case Flavor::III:
            return "III";
    }
    return "?";
}

std::string to_string(ClosureStatus status)
{
    switch (status) {
        case ClosureStatus::empty:
            return "EMPTY";
        case ClosureStatus::point:
            return "POINT";
        case ClosureStatus::irreducible:
            return "IRREDUCIBLE";
        case ClosureStatus::unresolved:
            return "UNRESOLVED";
    }
    return "?";
}

std::string to_string(OpenStatus status)
{
    switch (status) {
        case OpenStatus::empty:
            return "EMPTY";
        case OpenStatus::finite:
            return "FINITE";
        case OpenStatus::irreducible:
            return "IRREDUCIBLE";
        case OpenStatus::connected_reducible:
            return "CONNECTED_REDUCIBLE";
        case OpenStatus::unknown:
            return "UNKNOWN";
    }
    return "?";
}

std::string to_string(Generality generality)
{
    switch (generality) {
        case Generality::all_curves:
            return "ALL_CURVES";
        case Generality::general_maroni_n:
            return "GENERAL_MARONI_N";
    }
    return "?";
}

Flavor flavor_of(const SplittingType &e)
{
    if (e.b() - e.a() <= 1) {
        return Flavor::I;
    }
    if (e.c() - e.b() <= 1) {
        return Flavor::II;
    }
    return Flavor::III;
}

bool StratumReport::certified_nonempty() const noexcept
{
    switch (open_status) {
        case OpenStatus::finite:
        case OpenStatus::irreducible:
        case OpenStatus::connected_reducible:
            return true;
        default:
            return false;
    }
}

std::int64_t StratumReport::display_dim() const noexcept
{
    if (open_dim) {
        return *open_dim;
    }
    if (closure_dim) {
        return *closure_dim;
    }
    return expected_dim;
}

std::int64_t alpha_of(const TrigonalContext &ctx, const SplittingType &e)
{
    require_stratum(ctx, e);
    return (ctx.genus() + ctx.maroni()) / 2 + 1 - e.c() + e.a();
}

StratumReport classify(const TrigonalContext &ctx, const SplittingType &e)
{
    require_stratum(ctx, e);
    if (!ctx.char_zero) {
        throw ValidationError("only characteristic zero is supported");
    }
    const auto g = ctx.genus();
    const auto n = ctx.maroni();

    StratumReport report{.e = e};
    report.flavor = flavor_of(e);
    report.expected_codim = expected_codim(e);
    report.expected_dim = g - report.expected_codim;

    if (report.flavor != Flavor::III) {
        // The closure is W^0 of a symmetric product, irreducible of the expected dimension.
        const auto dim = report.expected_dim;
        if (dim < 0) {
            report.closure_status = ClosureStatus::empty;
            report.open_status = OpenStatus::empty;
        } else {
            report.closure_status = dim == 0 ? ClosureStatus::point : ClosureStatus::irreducible;
            report.closure_dim = dim;
            report.open_status = OpenStatus::unknown;
        }
        return report;
    }

    const auto alpha = alpha_of(ctx, e);
    report.alpha = alpha;

    if (alpha < 0) {
        // No sections of (E + alpha F)|_C, so Phi is empty; everything below is empty too.
        report.closure_status = ClosureStatus::empty;
        report.open_status = OpenStatus::empty;
    } else if (alpha >= n) {
        report.open_status = OpenStatus::irreducible;
        report.open_dim = 2 * alpha - n + 1;
        report.component_count = BigInt(1);
    } else if (!gaps_fit(ctx, e)) {
        report.open_status = OpenStatus::empty;
    } else if (alpha == 0) {
        report.open_status = OpenStatus::finite;
        report.open_dim = 0;
        report.point_count = binomial(e.c() - e.a() - 2 * n, e.b() - e.a() - n);
        report.generality = Generality::general_maroni_n;
    } else {
        auto count = component_sum(ctx, e);
        report.open_status = count == 1 ? OpenStatus::irreducible : OpenStatus::connected_reducible;
        report.open_dim = alpha;
        report.component_count = std::move(count);
        report.generality = Generality::general_maroni_n;
    }

    if (report.open_dim) {
        report.anomalous = *report.open_dim != report.expected_dim;
    } else {
        report.anomalous = report.expected_dim >= 0;
    }
    return report;
}

BigInt component_count(const TrigonalContext &ctx, const SplittingType &e)
{
    require_stratum(ctx, e);
    if (flavor_of(e) != Flavor::III) {
        throw ContractError("component_count applies to flavor III only, got " + e.to_string());
    }
    const auto alpha = alpha_of(ctx, e);
    if (alpha < 0 || alpha > ctx.maroni() - 1) {
        throw ContractError("component_count requires 0 <= alpha <= n - 1, got alpha = " + std::to_string(alpha)
                            + " with n = " + std::to_string(ctx.maroni()));
    }
    if (!gaps_fit(ctx, e)) {
        throw ContractError("stratum " + e.to_string() + " is empty: a gap exceeds 1 + (g - n)/2");
    }
    return component_sum(ctx, e);
}

BigInt point_count(const TrigonalContext &ctx, const SplittingType &e)
{
    require_stratum(ctx, e);
    if (flavor_of(e) != Flavor::III) {
        throw ContractError("point_count applies to flavor III only, got " + e.to_string());
    }
    const auto alpha = alpha_of(ctx, e);
    const auto n = ctx.maroni();
    if (alpha != 0 || alpha >= n) {
        throw ContractError("point_count requires alpha = 0 < n, got alpha = " + std::to_string(alpha));
    }
    if (!ctx.general_curve) {
        throw ContractError("point_count is established only for a general curve of Maroni invariant n; "
                            "the count for special curves is not determined");
    }
    if (!gaps_fit(ctx, e)) {
        throw ContractError("stratum " + e.to_string() + " is empty: a gap exceeds 1 + (g - n)/2");
    }
    return binomial(e.c() - e.a() - 2 * n, e.b() - e.a() - n);
}

ClassCoefficient class_coefficient(const SplittingType &e)
{
    ClassCoefficient out{BigInt(1), expected_codim(e)};
    if (flavor_of(e) == Flavor::III) {
        out.multiplier = binomial(e.c() - e.a() - 2, e.b() - e.a() - 1);
    }
    return out;
}

ClassCoefficient class_coefficient_checked(const TrigonalContext &ctx, const SplittingType &e)
{
    const auto report = classify(ctx, e);
    if (report.anomalous) {
        throw ContractError("class formula not applicable: " + e.to_string()
                            + " does not occur in the expected dimension");
    }
    return class_coefficient(e);
}

std::int64_t brill_noether_number(std::int64_t g, std::int64_t r, std::int64_t d)
{
    return g - (r + 1) * (g - d + r);
}

BNLocusReport bn_components(std::int64_t g, std::int64_t d, std::int64_t r)
{
    if (r < 1) {
        throw DomainError("bn_components requires r >= 1, got r = " + std::to_string(r));
    }
    if (g - d + r < 1) {
        throw DomainError("bn_components requires g - d + r >= 1, got " + std::to_string(g - d + r));
    }
    if (g < 0) {
        throw DomainError("genus must be non-negative");
    }

    BNLocusReport out{g, d, r, brill_noether_number(g, r, d), {}};
    auto floor_half = [](std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
    auto ceil_half = [&](std::int64_t x) { return x - floor_half(x); };

    out.components.push_back(
        {SplittingType{d - g - 1 - r, floor_half(r - 1), ceil_half(r - 1)}, out.rho + (r - 1) * (g - d + r - 1)});
    // The second component exists only once r >= d - g + 2.
    if (r >= d - g + 2) {
        out.components.push_back({SplittingType{floor_half(d - g - 2 - r), ceil_half(d - g - 2 - r), r},
                                  out.rho + r * (g - d + r - 2)});
    }
    for (const auto &component : out.components) {
        const auto by_codim = g - expected_codim(component.type);
        if (by_codim != component.dimension) {
            throw ConsistencyError("W^r_d component " + component.type.to_string() + ": dimension "
                                   + std::to_string(component.dimension) + " but g - u = "
                                   + std::to_string(by_codim));
        }
    }
    return out;
}

std::vector<StratumReport> deduce_empty_open(const TrigonalContext &ctx, std::span<const StratumReport> reports)
{
    std::vector<StratumReport> out(reports.begin(), reports.end());
    for (auto &target : out) {
        require_stratum(ctx, target.e);
        if (target.flavor == Flavor::III || target.open_status != OpenStatus::unknown || !target.closure_dim) {
            continue;
        }
        const auto closure_dim = *target.closure_dim;
        const StratumReport *witness = nullptr;
        for (const auto &candidate : reports) {
            if (candidate.flavor != Flavor::III || !candidate.certified_nonempty() || candidate.e == target.e) {
                continue;
            }
            if (candidate.open_dim.value_or(-1) < closure_dim || !dominance_leq(candidate.e, target.e)) {
                continue;
            }
            if (witness == nullptr || *candidate.open_dim > *witness->open_dim
                || (*candidate.open_dim == *witness->open_dim && candidate.e < witness->e)) {
                witness = &candidate;
            }
        }
        if (witness != nullptr) {
            target.open_status = OpenStatus::empty;
            target.open_dim.reset();
            target.empty_witness = witness->e;
        }
    }
    return out;
}

std::vector<StratumReport> classify_universe(const TrigonalContext &ctx, std::int64_t spread_bound)
{
    const auto types = enumerate_types(DegreeDatum{ctx.degree, ctx.genus(), 3}, spread_bound);
    std::vector<StratumReport> reports;
    reports.reserve(types.size());
    for (const auto &e : types) {
        reports.push_back(classify(ctx, e));
    }
    return deduce_empty_open(ctx, reports);
}

} // namespace strata
