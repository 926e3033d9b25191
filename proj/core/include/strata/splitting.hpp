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

#ifndef STRATA_SPLITTING_HPP
#define STRATA_SPLITTING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace strata
{

/// Splitting type of a vector bundle on the projective line: the twists
/// e_1 <= ... <= e_k of O(e_1) + ... + O(e_k). Always stored sorted.
class SplittingType
{
public:
    /// Sorts the input; throws ValidationError on an empty sequence.
    explicit SplittingType(std::vector<std::int64_t> entries);
    SplittingType(std::initializer_list<std::int64_t> entries);

    [[nodiscard]] std::span<const std::int64_t> entries() const noexcept
    {
        return m_entries;
    }
    [[nodiscard]] std::size_t rank() const noexcept
    {
        return m_entries.size();
    }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept
    {
        return m_entries[i];
    }
    [[nodiscard]] std::int64_t sum() const noexcept;
    /// e_k - e_1.
    [[nodiscard]] std::int64_t spread() const noexcept;

    // Rank-3 accessors (a <= b <= c). Throw DomainError for other ranks.
    [[nodiscard]] std::int64_t a() const;
    [[nodiscard]] std::int64_t b() const;
    [[nodiscard]] std::int64_t c() const;

    /// "(a, b, c)".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SplittingType &, const SplittingType &) = default;
    // Lexicographic on the sorted entries; used only for canonical ordering.
    friend std::strong_ordering operator<=>(const SplittingType &lhs, const SplittingType &rhs) noexcept
    {
        return lhs.m_entries <=> rhs.m_entries;
    }

private:
    std::vector<std::int64_t> m_entries;
};

std::ostream &operator<<(std::ostream &os, const SplittingType &e);

/// Free-function form of the SplittingType constructor.
SplittingType make_splitting_type(std::vector<std::int64_t> raw);

/// Parses "a,b,c" (whitespace tolerant). Throws ValidationError.
SplittingType parse_splitting_type(const std::string &text);

/// Degree data for a degree-k cover of the projective line by a genus-g curve and
/// a line bundle of degree d. Splitting types of the pushforward sum to d - g + 1 - k.
struct DegreeDatum {
    std::int64_t d;
    std::int64_t g;
    std::int64_t k;

    [[nodiscard]] std::int64_t splitting_sum() const noexcept
    {
        return d - g + 1 - k;
    }
};

/// u(e) = sum over pairs i < j of max(0, e_j - e_i - 1).
std::int64_t expected_codim(const SplittingType &e);

/// h^0 of O(e_1) + ... + O(e_k) on the projective line.
std::int64_t h0_split(const SplittingType &e);
/// h^1 of O(e_1) + ... + O(e_k) on the projective line.
std::int64_t h1_split(const SplittingType &e);

/// Specialization order: true iff every prefix sum of `low` is at most the
/// corresponding prefix sum of `high`. Throws DomainError on rank or total mismatch.
bool dominance_leq(const SplittingType &low, const SplittingType &high);

/// Default spread bound for the rank-3 stratification: no type with e_k - e_1 > g + 2
/// can have a non-empty stratum.
std::int64_t default_spread_bound(std::int64_t genus);

/// All sorted sequences of length datum.k with sum datum.splitting_sum() and
/// spread at most `spread_bound`, in lexicographic order.
std::vector<SplittingType> enumerate_types(const DegreeDatum &datum, std::int64_t spread_bound);

using Edge = std::pair<SplittingType, SplittingType>;

/// Covering relations (lower, upper) of the dominance order on `types`, sorted.
/// The input must share rank and sum; duplicates are ignored. When `types` is
/// the output of enumerate_types the result equals the covering relation of the
/// unbounded fixed-sum poset, since that set is closed under going up.
std::vector<Edge> hasse_edges(std::span<const SplittingType> types);

} // namespace strata

#endif
