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

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <unordered_map>

#include "strata/error.hpp"

namespace strata::phi
{

std::int64_t Component::base_points_in_d() const noexcept
{
    return std::popcount(in_d);
}

Params params(const TrigonalContext &ctx, const SplittingType &e)
{
    if (flavor_of(e) != Flavor::III) {
        throw ContractError("Phi model applies to flavor III only, got " + e.to_string());
    }
    const auto g = ctx.genus();
    return Params{
        .deg_d = g + 2 + e.a() + e.b() - 2 * e.c(),
        .deg_d_prime = g + 2 + 2 * e.a() - e.b() - e.c(),
        .alpha = alpha_of(ctx, e),
        .base_points = directrix_points(ctx.md),
    };
}

namespace
{

// Orders by popcount, then by the sorted label list.
bool canonical_less(std::uint32_t lhs, std::uint32_t rhs)
{
    const auto lc = std::popcount(lhs);
    const auto rc = std::popcount(rhs);
    if (lc != rc) {
        return lc < rc;
    }
    // Same size: compare label sequences; the first differing lowest label decides.
    const auto diff = lhs ^ rhs;
    const auto lowest = diff & (~diff + 1);
    return (lhs & lowest) != 0;
}

} // namespace

std::vector<Component> enumerate_components(const Params &p)
{
    if (p.base_points < 0) {
        throw ContractError("negative number of base points");
    }
    if (p.base_points > max_base_points) {
        throw ResourceError("refusing to enumerate 2^" + std::to_string(p.base_points) + " base-point subsets (limit 2^"
                            + std::to_string(max_base_points) + ")");
    }
    std::vector<Component> out;
    if (p.alpha < 0) {
        return out;
    }
    const std::uint64_t limit = std::uint64_t{1} << p.base_points;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const auto in_d = static_cast<std::uint32_t>(mask);
        const std::int64_t m = std::popcount(in_d);
        const auto two_in_d = p.deg_d - m - p.alpha;
        const auto two_in_d_prime = p.deg_d_prime - (p.base_points - m) - p.alpha;
        // A negative count means the other divisor contains a whole fiber, so h^0 >= 2.
        if (two_in_d < 0 || two_in_d_prime < 0) {
            continue;
        }
        out.push_back({in_d, two_in_d, two_in_d_prime});
    }
    std::sort(out.begin(), out.end(),
              [](const Component &x, const Component &y) { return canonical_less(x.in_d, y.in_d); });
    return out;
}

BigInt oracle_count(const Params &p)
{
    return BigInt(enumerate_components(p).size());
}

std::size_t AdjacencyGraph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto &adj : neighbours) {
        twice += adj.size();
    }
    return twice / 2;
}

AdjacencyGraph adjacency_graph(std::span<const Component> components)
{
    AdjacencyGraph graph{{components.begin(), components.end()}, {}};
    const auto count = graph.vertices.size();
    graph.neighbours.resize(count);

    std::uint32_t used = 0;
    for (const auto &v : graph.vertices) {
        used |= v.in_d;
    }
    const int width = std::bit_width(used);

    // Dense lookup for the usual small label sets, hashing beyond that.
    constexpr int dense_limit = 20;
    constexpr auto absent = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dense;
    std::unordered_map<std::uint32_t, std::size_t> sparse;
    if (width <= dense_limit) {
        dense.assign(std::size_t{1} << width, absent);
        for (std::size_t i = 0; i < count; ++i) {
            dense[graph.vertices[i].in_d] = i;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            sparse.emplace(graph.vertices[i].in_d, i);
        }
    }
    auto lookup = [&](std::uint32_t mask) -> std::size_t {
        if (!dense.empty()) {
            return mask < dense.size() ? dense[mask] : absent;
        }
        const auto it = sparse.find(mask);
        return it == sparse.end() ? absent : it->second;
    };

    // Flipping a bit outside `width` never lands on a vertex.
    for (std::size_t i = 0; i < count; ++i) {
        for (int bit = 0; bit < width; ++bit) {
            const auto j = lookup(graph.vertices[i].in_d ^ (std::uint32_t{1} << bit));
            if (j != absent) {
                graph.neighbours[i].push_back(j);
            }
        }
        std::sort(graph.neighbours[i].begin(), graph.neighbours[i].end());
    }
    return graph;
}

bool is_connected(const AdjacencyGraph &graph)
{
    const auto count = graph.vertices.size();
    if (count <= 1) {
        return true;
    }
    std::vector<bool> seen(count, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const auto v = frontier.front();
        frontier.pop();
        for (const auto w : graph.neighbours[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == count;
}

} // namespace strata::phi
