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

#ifndef STRATA_PHI_ORACLE_HPP
#define STRATA_PHI_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "strata/bigint.hpp"
#include "strata/splitting.hpp"
#include "strata/theory.hpp"

namespace strata
{

/// Combinatorial model of the pairs (D, D') with D + D' = (E + alpha F)|_C and
/// h^0(D) = h^0(D') = 1. Independent of the closed-form component counts: components
/// are found by enumerating how the base points E.C split between D and D'.
namespace phi
{

inline constexpr std::int64_t max_base_points = 30;

struct Params {
    std::int64_t deg_d = 0;       // g + 2 + a + b - 2c
    std::int64_t deg_d_prime = 0; // g + 2 + 2a - b - c
    std::int64_t alpha = 0;
    std::int64_t base_points = 0; // (g - 3n)/2 + 1 labeled points of E.C

    friend bool operator==(const Params &, const Params &) = default;
};

/// One component: the base points in D (bit i set = point i lies in D) and how many
/// of the alpha moving fibers put two points in D resp. in D'.
struct Component {
    std::uint32_t in_d = 0;
    std::int64_t fibers_two_in_d = 0;
    std::int64_t fibers_two_in_d_prime = 0;

    [[nodiscard]] std::int64_t base_points_in_d() const noexcept;
    [[nodiscard]] std::int64_t dimension() const noexcept
    {
        return fibers_two_in_d + fibers_two_in_d_prime;
    }

    friend bool operator==(const Component &, const Component &) = default;
};

/// Throws ContractError unless e is flavor III.
Params params(const TrigonalContext &ctx, const SplittingType &e);

/// Every subset S of the base points with both fiber counts non-negative, sorted by
/// |S| and then lexicographically by the labels in S. Empty when alpha < 0.
/// Throws ResourceError when base_points exceeds max_base_points.
std::vector<Component> enumerate_components(const Params &p);

/// Number of components by direct enumeration.
BigInt oracle_count(const Params &p);

/// Components are adjacent when their base-point sets differ in exactly one point.
struct AdjacencyGraph {
    std::vector<Component> vertices;
    std::vector<std::vector<std::size_t>> neighbours;

    [[nodiscard]] std::size_t edge_count() const noexcept;
};

AdjacencyGraph adjacency_graph(std::span<const Component> components);

/// Vacuously true for zero or one vertex.
bool is_connected(const AdjacencyGraph &graph);

} // namespace phi

} // namespace strata

#endif
