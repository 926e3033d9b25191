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

#include "strata/splitting.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "strata/error.hpp"

namespace
{

using strata::DegreeDatum;
using strata::Edge;
using strata::SplittingType;

// Every sorted triple with the given sum and spread, by direct triple loop.
std::set<SplittingType> brute_triples(std::int64_t sum, std::int64_t bound)
{
    std::set<SplittingType> out;
    const auto reach = (sum < 0 ? -sum : sum) + 3 * bound + 3;
    for (std::int64_t a = -reach; a <= reach; ++a) {
        for (std::int64_t b = a; b <= a + bound; ++b) {
            const auto c = sum - a - b;
            if (c >= b && c - a <= bound) {
                out.insert(SplittingType{a, b, c});
            }
        }
    }
    return out;
}

// Covering pairs from the definition: x < y with no z strictly between.
std::set<Edge> brute_covers(const std::vector<SplittingType> &nodes)
{
    auto lt = [](const SplittingType &x, const SplittingType &y) { return x != y && strata::dominance_leq(x, y); };
    std::set<Edge> out;
    for (const auto &x : nodes) {
        for (const auto &y : nodes) {
            if (!lt(x, y)) {
                continue;
            }
            const bool between = std::any_of(nodes.begin(), nodes.end(),
                                             [&](const SplittingType &z) { return lt(x, z) && lt(z, y); });
            if (!between) {
                out.emplace(x, y);
            }
        }
    }
    return out;
}

TEST(MakeSplittingType, SortsAscending)
{
    EXPECT_EQ(strata::make_splitting_type({0, -5, -8}), (SplittingType{-8, -5, 0}));
    EXPECT_EQ(strata::make_splitting_type({-8, -5, 0}), (SplittingType{-8, -5, 0}));
}

TEST(MakeSplittingType, EmptyIsRejected)
{
    EXPECT_THROW(strata::make_splitting_type({}), strata::ValidationError);
}

TEST(ParseSplittingType, ToleratesWhitespace)
{
    EXPECT_EQ(strata::parse_splitting_type(" -4,0,0"), (SplittingType{-4, 0, 0}));
    EXPECT_EQ(strata::parse_splitting_type("-1, -8 ,-4"), (SplittingType{-8, -4, -1}));
    EXPECT_THROW(strata::parse_splitting_type("1,,2"), strata::ValidationError);
    EXPECT_THROW(strata::parse_splitting_type("1,x,2"), strata::ValidationError);
    EXPECT_THROW(strata::parse_splitting_type("1,2.5"), strata::ValidationError);
}

TEST(SplittingType, PrintsWithCommas)
{
    EXPECT_EQ((SplittingType{-8, -4, -1}).to_string(), "(-8, -4, -1)");
    EXPECT_THROW(static_cast<void>((SplittingType{1, 2}).c()), strata::DomainError);
}

TEST(ExpectedCodim, DiagramValues)
{
    EXPECT_EQ(strata::expected_codim({-8, -5, 0}), 13);
    EXPECT_EQ(strata::expected_codim({-7, -4, -2}), 7);
    EXPECT_EQ(strata::expected_codim({4, 4, 4}), 0);
}

TEST(ExpectedCodim, AgreesWithSingleConditionFormula)
{
    // b - a <= 1 < c - a: d - 3c = g - u forces u = 2c - a - b - 2.
    for (std::int64_t a = -15; a <= 15; ++a) {
        for (std::int64_t b = a; b <= std::min<std::int64_t>(a + 1, 15); ++b) {
            for (std::int64_t c = b + 1; c <= 15; ++c) {
                ASSERT_EQ(strata::expected_codim({a, b, c}), 2 * c - a - b - 2) << a << ' ' << b << ' ' << c;
            }
        }
    }
}

TEST(ExpectedCodim, ZeroExactlyOnNearBalanced)
{
    for (const auto &e : strata::enumerate_types({0, 11, 3}, 13)) {
        EXPECT_EQ(strata::expected_codim(e) == 0, e.spread() <= 1) << e;
    }
    for (const auto &e : strata::enumerate_types({5, 2, 4}, 6)) {
        EXPECT_EQ(strata::expected_codim(e) == 0, e.spread() <= 1) << e;
    }
}

TEST(SplitCohomology, Examples)
{
    EXPECT_EQ(strata::h0_split({-8, -5, 0}), 1);
    EXPECT_EQ(strata::h0_split({-4, 0, 0}), 2);
    EXPECT_EQ(strata::h0_split({-1, -1, -1}), 0);
    EXPECT_EQ(strata::h1_split({-1, -1, -1}), 0);
    EXPECT_EQ(strata::h1_split({-8, -5, 0}), 7 + 4);
}

TEST(SplitCohomology, RiemannRoch)
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> entry(-40, 40);
    std::uniform_int_distribution<int> rank(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::int64_t> raw(rank(rng));
        for (auto &x : raw) {
            x = entry(rng);
        }
        const SplittingType e(raw);
        ASSERT_EQ(strata::h0_split(e) - strata::h1_split(e), e.sum() + static_cast<std::int64_t>(e.rank())) << e;
    }
}

TEST(Dominance, Examples)
{
    EXPECT_TRUE(strata::dominance_leq({-8, -5, 0}, {-7, -6, 0}));
    EXPECT_TRUE(strata::dominance_leq({-7, -6, 0}, {-7, -6, 0}));
    EXPECT_FALSE(strata::dominance_leq({-8, -4, -1}, {-7, -6, 0}));
    EXPECT_FALSE(strata::dominance_leq({-7, -6, 0}, {-8, -4, -1}));
}

TEST(Dominance, MismatchedDomainsThrow)
{
    EXPECT_THROW(strata::dominance_leq({0, 0, 0}, {0, 0}), strata::DomainError);
    EXPECT_THROW(strata::dominance_leq({0, 0, 0}, {0, 0, 1}), strata::DomainError);
}

TEST(Dominance, IsPartialOrder)
{
    for (const DegreeDatum datum : {DegreeDatum{0, 11, 3}, DegreeDatum{3, 9, 3}, DegreeDatum{4, 6, 4}}) {
        const auto types = strata::enumerate_types(datum, datum.g + 2);
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
        for (const auto &x : types) {
            ASSERT_TRUE(strata::dominance_leq(x, x));
        }
        for (int trial = 0; trial < 20000; ++trial) {
            const auto &x = types[pick(rng)];
            const auto &y = types[pick(rng)];
            const auto &z = types[pick(rng)];
            if (strata::dominance_leq(x, y) && strata::dominance_leq(y, x)) {
                ASSERT_EQ(x, y);
            }
            if (strata::dominance_leq(x, y) && strata::dominance_leq(y, z)) {
                ASSERT_TRUE(strata::dominance_leq(x, z)) << x << ' ' << y << ' ' << z;
            }
        }
    }
}

TEST(Dominance, MonotoneInvariants)
{
    // Specializing raises u and (upper semicontinuity) h^0.
    const auto types = strata::enumerate_types({2, 10, 3}, 12);
    for (const auto &low : types) {
        for (const auto &high : types) {
            if (strata::dominance_leq(low, high)) {
                ASSERT_GE(strata::expected_codim(low), strata::expected_codim(high)) << low << ' ' << high;
                ASSERT_GE(strata::h0_split(low), strata::h0_split(high)) << low << ' ' << high;
            }
        }
    }
}

TEST(Dominance, BalancedTypeIsUniqueMaximum)
{
    for (const DegreeDatum datum : {DegreeDatum{0, 11, 3}, DegreeDatum{1, 11, 3}, DegreeDatum{2, 11, 3}}) {
        const auto types = strata::enumerate_types(datum, 13);
        std::vector<SplittingType> maxima;
        for (const auto &x : types) {
            if (std::all_of(types.begin(), types.end(),
                            [&](const SplittingType &y) { return strata::dominance_leq(y, x); })) {
                maxima.push_back(x);
            }
        }
        ASSERT_EQ(maxima.size(), 1U);
        EXPECT_LE(maxima.front().spread(), 1);
    }
}

TEST(EnumerateTypes, ContainsDiagramTypes)
{
    const auto types = strata::enumerate_types({0, 11, 3}, strata::default_spread_bound(11));
    const std::set<SplittingType> all(types.begin(), types.end());
    for (const SplittingType e : {SplittingType{-8, -5, 0}, SplittingType{-7, -6, 0}, SplittingType{-8, -4, -1},
                                  SplittingType{-7, -5, -1}, SplittingType{-8, -3, -2}, SplittingType{-6, -6, -1},
                                  SplittingType{-7, -4, -2}, SplittingType{-7, -3, -3}, SplittingType{-6, -5, -2}}) {
        EXPECT_TRUE(all.contains(e)) << e;
    }
}

TEST(EnumerateTypes, ZeroBoundNeedsDivisibility)
{
    EXPECT_TRUE(strata::enumerate_types({0, 11, 3}, 0).empty());
    const auto balanced = strata::enumerate_types({1, 11, 3}, 0);
    ASSERT_EQ(balanced.size(), 1U);
    EXPECT_EQ(balanced.front(), (SplittingType{-4, -4, -4}));
}

TEST(EnumerateTypes, GenusSixDegreeFour)
{
    const auto types = strata::enumerate_types({4, 6, 3}, 8);
    EXPECT_NE(std::find(types.begin(), types.end(), SplittingType{-4, 0, 0}), types.end());
    EXPECT_NE(std::find(types.begin(), types.end(), SplittingType{-3, -2, 1}), types.end());
}

TEST(EnumerateTypes, MatchesBruteForce)
{
    for (std::int64_t g = 0; g <= 14; ++g) {
        for (std::int64_t d = -3; d <= 6; ++d) {
            for (std::int64_t bound : {0, 1, 3, static_cast<int>(g + 2)}) {
                const auto types = strata::enumerate_types({d, g, 3}, bound);
                const std::set<SplittingType> got(types.begin(), types.end());
                ASSERT_EQ(got.size(), types.size());
                ASSERT_EQ(got, brute_triples(d - g - 2, bound)) << "g=" << g << " d=" << d << " bound=" << bound;
                for (const auto &e : types) {
                    ASSERT_EQ(e.sum(), d - g + 1 - 3);
                }
            }
        }
    }
}

TEST(EnumerateTypes, OtherRanks)
{
    // Rank 4, sum -3, spread <= 2, checked by a quadruple loop.
    std::set<SplittingType> expected;
    for (std::int64_t a = -5; a <= 5; ++a) {
        for (std::int64_t b = a; b <= a + 2; ++b) {
            for (std::int64_t c = b; c <= a + 2; ++c) {
                const auto e4 = -3 - a - b - c;
                if (e4 >= c && e4 <= a + 2) {
                    expected.insert(SplittingType{a, b, c, e4});
                }
            }
        }
    }
    const auto types = strata::enumerate_types({0, 0, 4}, 2);
    EXPECT_EQ(std::set<SplittingType>(types.begin(), types.end()), expected);
    EXPECT_EQ(strata::enumerate_types({5, 0, 1}, 0), std::vector<SplittingType>{SplittingType{5}});
}

TEST(EnumerateTypes, RejectsBadArguments)
{
    EXPECT_THROW(strata::enumerate_types({0, 11, 3}, -1), strata::ValidationError);
    EXPECT_THROW(strata::enumerate_types({0, 11, 0}, 3), strata::ValidationError);
}

TEST(HasseEdges, DiagramArrows)
{
    const auto types = strata::enumerate_types({0, 11, 3}, 13);
    const auto edges = strata::hasse_edges(types);
    const std::set<Edge> all(edges.begin(), edges.end());
    EXPECT_TRUE(all.contains(Edge{{-8, -5, 0}, {-7, -6, 0}}));
    EXPECT_TRUE(all.contains(Edge{{-8, -4, -1}, {-8, -3, -2}}));
    EXPECT_FALSE(all.contains(Edge{{-8, -3, -2}, {-7, -3, -3}}));
}

TEST(HasseEdges, SingletonHasNoEdges)
{
    const std::vector<SplittingType> one{{-4, -4, -5}};
    EXPECT_TRUE(strata::hasse_edges(one).empty());
    EXPECT_TRUE(strata::hasse_edges({}).empty());
}

TEST(HasseEdges, EqualsBruteForceTransitiveReduction)
{
    for (const DegreeDatum datum : {DegreeDatum{0, 11, 3}, DegreeDatum{1, 8, 3}, DegreeDatum{0, 5, 4}}) {
        const auto types = strata::enumerate_types(datum, datum.g + 2);
        const auto edges = strata::hasse_edges(types);
        EXPECT_EQ(std::set<Edge>(edges.begin(), edges.end()), brute_covers(types)) << "g=" << datum.g;
    }
}

TEST(HasseEdges, CoversAreSingleUnitTransfers)
{
    // Independent description of covers in the dominance order: the lower type is the
    // upper one with one unit moved from entry p to entry q > p, staying sorted, where
    // q = p + 1 or the two entries were equal.
    const auto types = strata::enumerate_types({3, 12, 3}, 14);
    const std::set<SplittingType> universe(types.begin(), types.end());
    std::set<Edge> transfers;
    for (const auto &upper : types) {
        for (std::size_t p = 0; p < upper.rank(); ++p) {
            for (std::size_t q = p + 1; q < upper.rank(); ++q) {
                if (q != p + 1 && upper[p] != upper[q]) {
                    continue;
                }
                std::vector<std::int64_t> raw(upper.entries().begin(), upper.entries().end());
                --raw[p];
                ++raw[q];
                if (!std::is_sorted(raw.begin(), raw.end())) {
                    continue;
                }
                const SplittingType lower(raw);
                if (universe.contains(lower) && lower != upper) {
                    transfers.emplace(lower, upper);
                }
            }
        }
    }
    const auto edges = strata::hasse_edges(types);
    EXPECT_EQ(std::set<Edge>(edges.begin(), edges.end()), transfers);
}

} // namespace
