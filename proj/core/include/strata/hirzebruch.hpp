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

#ifndef STRATA_HIRZEBRUCH_HPP
#define STRATA_HIRZEBRUCH_HPP

#include <cstdint>
#include <string>

namespace strata
{

/// Divisor class ell * E + em * F on the Hirzebruch surface F_n, where E is the
/// directrix (E^2 = -n) and F a fiber.
struct SurfaceClass {
    std::int64_t ell = 0;
    std::int64_t em = 0;

    friend bool operator==(const SurfaceClass &, const SurfaceClass &) = default;
};

inline constexpr SurfaceClass directrix_class{1, 0};
inline constexpr SurfaceClass fiber_class{0, 1};

/// Genus and Maroni invariant of a trigonal curve.
///
/// Validity: n >= 0, g = n (mod 2), g >= n + 2 and (g - 3n)/2 + 1 >= 0. The last
/// two keep the scroll degrees (g -+ n)/2 - 1 and the directrix intersection
/// E.C non-negative.
class MaroniDatum
{
public:
    /// Throws ValidationError naming the violated inequality.
    MaroniDatum(std::int64_t genus, std::int64_t maroni);

    [[nodiscard]] std::int64_t genus() const noexcept
    {
        return m_genus;
    }
    [[nodiscard]] std::int64_t maroni() const noexcept
    {
        return m_maroni;
    }

    /// Empty string when (genus, maroni) is valid, otherwise the violated inequality.
    static std::string violation(std::int64_t genus, std::int64_t maroni);
    static bool is_valid(std::int64_t genus, std::int64_t maroni)
    {
        return violation(genus, maroni).empty();
    }

    friend bool operator==(const MaroniDatum &, const MaroniDatum &) = default;

private:
    std::int64_t m_genus;
    std::int64_t m_maroni;
};

/// Intersection pairing on F_n.
std::int64_t intersect(std::int64_t n, const SurfaceClass &lhs, const SurfaceClass &rhs);

/// [C] = 3E + ((g + 3n)/2 + 1)F.
SurfaceClass curve_class(const MaroniDatum &md);

/// Number of points of E meeting C, (g - 3n)/2 + 1. These are distinct and reduced
/// only for a general curve of the given Maroni invariant.
std::int64_t directrix_points(const MaroniDatum &md);

// Cohomology of O(ell E + em F) computed from its pushforward
// O(em) + O(em - n) + ... + O(em - ell n) to the projective line. ell must be >= 0.
std::int64_t h0_surface(std::int64_t n, std::int64_t ell, std::int64_t em);
std::int64_t h1_surface(std::int64_t n, std::int64_t ell, std::int64_t em);

enum class BaseLocus { none, directrix, all };

struct RestrictedSections {
    std::int64_t h0;
    BaseLocus base_locus;
};

/// h^0(C, O_C(E + alpha F)) and its base locus, for alpha <= (g + n)/2.
/// Throws DomainError above that bound.
RestrictedSections restricted_h0(const MaroniDatum &md, std::int64_t alpha);

/// Checks (E + ((g + n)/2 - 1)F).C == 2g - 2.
bool canonical_degree_check(const MaroniDatum &md);

std::string to_string(BaseLocus locus);

} // namespace strata

#endif
