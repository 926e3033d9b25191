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

#include "strata/hirzebruch.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata
{

MaroniDatum::MaroniDatum(std::int64_t genus, std::int64_t maroni) : m_genus(genus), m_maroni(maroni)
{
    if (auto why = violation(genus, maroni); !why.empty()) {
        throw ValidationError("invalid (genus, Maroni invariant) = (" + std::to_string(genus) + ", "
                              + std::to_string(maroni) + "): " + why);
    }
}

std::string MaroniDatum::violation(std::int64_t genus, std::int64_t maroni)
{
    if (maroni < 0) {
        return "n >= 0 violated";
    }
    if ((genus - maroni) % 2 != 0) {
        return "g = n (mod 2) violated";
    }
    if (genus < maroni + 2) {
        return "g >= n + 2 violated";
    }
    if ((genus - 3 * maroni) / 2 + 1 < 0) {
        return "(g - 3n)/2 + 1 >= 0 violated";
    }
    return {};
}

std::int64_t intersect(std::int64_t n, const SurfaceClass &lhs, const SurfaceClass &rhs)
{
    return lhs.ell * rhs.em + rhs.ell * lhs.em - n * lhs.ell * rhs.ell;
}

SurfaceClass curve_class(const MaroniDatum &md)
{
    return {3, (md.genus() + 3 * md.maroni()) / 2 + 1};
}

std::int64_t directrix_points(const MaroniDatum &md)
{
    return (md.genus() - 3 * md.maroni()) / 2 + 1;
}

namespace
{

void require_effective_ell(std::int64_t n, std::int64_t ell)
{
    if (ell < 0) {
        throw DomainError("surface cohomology is modeled only for ell >= 0, got ell = " + std::to_string(ell));
    }
    if (n < 0) {
        throw DomainError("Hirzebruch index must be non-negative, got n = " + std::to_string(n));
    }
}

} // namespace

std::int64_t h0_surface(std::int64_t n, std::int64_t ell, std::int64_t em)
{
    require_effective_ell(n, ell);
    std::int64_t h0 = 0;
    for (std::int64_t i = 0; i <= ell; ++i) {
        h0 += std::max<std::int64_t>(0, em - i * n + 1);
    }
    return h0;
}

std::int64_t h1_surface(std::int64_t n, std::int64_t ell, std::int64_t em)
{
    require_effective_ell(n, ell);
    std::int64_t h1 = 0;
    for (std::int64_t i = 0; i <= ell; ++i) {
        h1 += std::max<std::int64_t>(0, -(em - i * n) - 1);
    }
    return h1;
}

RestrictedSections restricted_h0(const MaroniDatum &md, std::int64_t alpha)
{
    const auto g = md.genus();
    const auto n = md.maroni();
    if (alpha > (g + n) / 2) {
        throw DomainError("restricted_h0 requires alpha <= (g + n)/2 = " + std::to_string((g + n) / 2)
                          + ", got alpha = " + std::to_string(alpha));
    }
    if (alpha < 0) {
        return {0, BaseLocus::all};
    }
    if (alpha <= n - 1) {
        return {alpha + 1, BaseLocus::directrix};
    }
    return {2 * alpha - n + 2, BaseLocus::none};
}

bool canonical_degree_check(const MaroniDatum &md)
{
    const SurfaceClass canonical{1, (md.genus() + md.maroni()) / 2 - 1};
    return intersect(md.maroni(), canonical, curve_class(md)) == 2 * md.genus() - 2;
}

std::string to_string(BaseLocus locus)
{
    switch (locus) {
        case BaseLocus::none:
            return "none";
        case BaseLocus::directrix:
            return "directrix";
        case BaseLocus::all:
            return "all";
    }
    return "unknown";
}

} // namespace strata
