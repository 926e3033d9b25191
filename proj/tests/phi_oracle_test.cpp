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

#include "strata/phi_oracle.hpp"

#include <bit>

#include <gtest/gtest.h>

#include "strata/error.hpp"

namespace
{

using strata::SplittingType;
using strata::phi::Component;
using strata::phi::Params;

// Brute-force count of label subsets satisfying both fiber inequalities.
std::int64_t brute_count(const Params &p)
{
    if (p.alpha < 0) {
        return 0;
    }
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.base_points); ++mask) {
        const std::int64_t m = std::popcount(mask);
        total += (p.deg_d - m - p.alpha >= 0 && p.deg_d_prime - (p.base_points - m) - p.alpha >= 0) ? 1 : 0;
    }
    return total;
}

template <typename Fn>
void small_alpha_sweep(std::int64_t max_genus, Fn &&f)
{
    for (std::int64_t g = 0; g <= max_genus; ++g) {
        for (std::int64_t n = 1; n <= g; ++n) {
            if (!strata::MaroniDatum::is_valid(g, n)) {
                continue;
            }
            for (std::int64_t d = 0; d < 3; ++d) {
                const auto ctx = strata::make_context(g, n, d);
                for (const auto &e : strata::enumerate_types({d, g, 3}, g + 2)) {
                    if (strata::flavor_of(e) != strata::Flavor::III) {
                        continue;
                    }
                    const auto alpha = strata::alpha_of(ctx, e);
                    if (alpha >= 0 && alpha < n) {
                        f(ctx, e);
                    }
                }
            }
        }
    }
}

TEST(Params, WorkedExamples)
{
    const auto ctx = strata::make_context(11, 3, 0);
    EXPECT_EQ(strata::phi::params(ctx, {-8, -4, -1}), (Params{3, 2, 1, 2}));
    EXPECT_EQ(strata::phi::params(ctx, {-7, -5, -1}), (Params{3, 5, 2, 2}));
    EXPECT_THROW(strata::phi::params(ctx, {-7, -6, 0}), strata::ContractError);
}

TEST(Components, WorkedExample)
{
    const auto components = strata::phi::enumerate_components({3, 2, 1, 2});
    ASSERT_EQ(components.size(), 3U);
    EXPECT_EQ(components[0], (Component{0b01, 1, 0}));
    EXPECT_EQ(components[1], (Component{0b10, 1, 0}));
    EXPECT_EQ(components[2], (Component{0b11, 0, 1}));
    for (const auto &c : components) {
        EXPECT_EQ(c.dimension(), 1);
        EXPECT_NE(c.in_d, 0U);
    }
    EXPECT_EQ(components[2].base_points_in_d(), 2);
}

TEST(Components, AlphaZeroGivesFixedSizeSubsets)
{
    // deg D = 2 pins m = 2 out of 4 labels; D' then has exactly the other two.
    const auto components = strata::phi::enumerate_components({2, 2, 0, 4});
    ASSERT_EQ(components.size(), 6U);
    for (const auto &c : components) {
        EXPECT_EQ(c.base_points_in_d(), 2);
        EXPECT_EQ(c.dimension(), 0);
    }
    EXPECT_EQ(components.front().in_d, 0b0011U);
    EXPECT_EQ(components.back().in_d, 0b1100U);
    EXPECT_EQ(strata::phi::adjacency_graph(components).edge_count(), 0U);
}

TEST(Components, NoBasePoints)
{
    EXPECT_EQ(strata::phi::oracle_count({0, 0, 0, 0}), 1);
    EXPECT_EQ(strata::phi::oracle_count({0, 0, 1, 0}), 0);
    EXPECT_EQ(strata::phi::oracle_count({4, 4, -1, 0}), 0);
}

TEST(Components, ResourceGuard)
{
    EXPECT_THROW(strata::phi::enumerate_components({40, 40, 1, 31}), strata::ResourceError);
    EXPECT_THROW(strata::phi::enumerate_components({1, 1, 1, -1}), strata::ContractError);
}

TEST(Components, CanonicalOrder)
{
    const auto components = strata::phi::enumerate_components({5, 5, 1, 4});
    for (std::size_t i = 1; i < components.size(); ++i) {
        const auto &x = components[i - 1];
        const auto &y = components[i];
        if (x.base_points_in_d() == y.base_points_in_d()) {
            const auto diff = x.in_d ^ y.in_d;
            EXPECT_NE(x.in_d & (diff & (~diff + 1)), 0U);
        } else {
            EXPECT_LT(x.base_points_in_d(), y.base_points_in_d());
        }
    }
}

TEST(Adjacency, WorkedExample)
{
    const auto graph = strata::phi::adjacency_graph(strata::phi::enumerate_components({3, 2, 1, 2}));
    EXPECT_EQ(graph.edge_count(), 2U);
    EXPECT_EQ(graph.neighbours[0], (std::vector<std::size_t>{2}));
    EXPECT_EQ(graph.neighbours[1], (std::vector<std::size_t>{2}));
    EXPECT_EQ(graph.neighbours[2], (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(strata::phi::is_connected(graph));
}

TEST(Adjacency, DisconnectedGraphIsDetected)
{
    std::vector<Component> components{{0b01, 0, 0}, {0b10, 0, 0}};
    EXPECT_FALSE(strata::phi::is_connected(strata::phi::adjacency_graph(components)));
    EXPECT_TRUE(strata::phi::is_connected(strata::phi::adjacency_graph({})));
}

TEST(Adjacency, SparseLookupAgreesWithDense)
{
    // Labels beyond the dense window force the hashed path.
    std::vector<Component> components{{1U << 24, 0, 0}, {(1U << 24) | 1U, 0, 0}, {1U, 0, 0}, {2U, 0, 0}};
    const auto graph = strata::phi::adjacency_graph(components);
    EXPECT_EQ(graph.edge_count(), 2U);
    EXPECT_FALSE(strata::phi::is_connected(graph));
}

TEST(Oracle, ExclusionMatchesBruteForce)
{
    for (std::int64_t points = 0; points <= 8; ++points) {
        for (std::int64_t dd = -2; dd <= 10; ++dd) {
            for (std::int64_t ddp = -2; ddp <= 10; ++ddp) {
                for (std::int64_t alpha = -1; alpha <= 4; ++alpha) {
                    const Params p{dd, ddp, alpha, points};
                    ASSERT_EQ(strata::phi::oracle_count(p), brute_count(p));
                }
            }
        }
    }
}

TEST(Oracle, WindowMatchesComponentCount)
{
    std::size_t cases = 0;
    small_alpha_sweep(30, [&](const strata::TrigonalContext &ctx, const SplittingType &e) {
        const auto p = strata::phi::params(ctx, e);
        const auto report = strata::classify(ctx, e);
        const auto oracle = strata::phi::oracle_count(p);
        if (report.open_status == strata::OpenStatus::empty) {
            ASSERT_EQ(oracle, 0) << e;
        } else {
            ASSERT_EQ(oracle, strata::component_count(ctx, e)) << "g=" << ctx.genus() << " n=" << ctx.maroni() << e;
        }
        ++cases;
    });
    EXPECT_GT(cases, 1000U);
}

TEST(Oracle, EquidimensionalAndConnected)
{
    small_alpha_sweep(24, [](const strata::TrigonalContext &ctx, const SplittingType &e) {
        const auto p = strata::phi::params(ctx, e);
        const auto components = strata::phi::enumerate_components(p);
        for (const auto &c : components) {
            ASSERT_EQ(c.dimension(), p.alpha) << e;
        }
        const auto graph = strata::phi::adjacency_graph(components);
        if (p.alpha >= 1) {
            ASSERT_TRUE(strata::phi::is_connected(graph)) << e;
        } else {
            ASSERT_EQ(graph.edge_count(), 0U) << e;
        }
    });
}

} // namespace
