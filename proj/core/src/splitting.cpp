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
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "strata/error.hpp"

namespace strata
{

namespace
{

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    auto q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den)
{
    return -floor_div(-num, den);
}

void require_rank3(const SplittingType &e)
{
    if (e.rank() != 3) {
        throw DomainError("rank-3 accessor used on splitting type " + e.to_string());
    }
}

} // namespace

SplittingType::SplittingType(std::vector<std::int64_t> entries) : m_entries(std::move(entries))
{
    if (m_entries.empty()) {
        throw ValidationError("splitting type must have at least one entry");
    }
    std::sort(m_entries.begin(), m_entries.end());
}

SplittingType::SplittingType(std::initializer_list<std::int64_t> entries)
    : SplittingType(std::vector<std::int64_t>(entries))
{
}

std::int64_t SplittingType::sum() const noexcept
{
    return std::accumulate(m_entries.begin(), m_entries.end(), std::int64_t{0});
}

std::int64_t SplittingType::spread() const noexcept
{
    return m_entries.back() - m_entries.front();
}

std::int64_t SplittingType::a() const
{
    require_rank3(*this);
    return m_entries[0];
}

std::int64_t SplittingType::b() const
{
    require_rank3(*this);
    return m_entries[1];
}

std::int64_t SplittingType::c() const
{
    require_rank3(*this);
    return m_entries[2];
}

std::string SplittingType::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const SplittingType &e)
{
    os << '(';
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        os << e[i];
    }
    return os << ')';
}

SplittingType make_splitting_type(std::vector<std::int64_t> raw)
{
    return SplittingType(std::move(raw));
}

SplittingType parse_splitting_type(const std::string &text)
{
    std::vector<std::int64_t> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw ValidationError("empty entry in splitting type '" + text + "'");
        }
        token = token.substr(first, last - first + 1);
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size()) {
            throw ValidationError("not an integer: '" + token + "' in splitting type '" + text + "'");
        }
        entries.push_back(value);
    }
    return SplittingType(std::move(entries));
}

std::int64_t expected_codim(const SplittingType &e)
{
    std::int64_t u = 0;
    for (std::size_t i = 0; i < e.rank(); ++i) {
        for (std::size_t j = i + 1; j < e.rank(); ++j) {
            u += std::max<std::int64_t>(0, e[j] - e[i] - 1);
        }
    }
    return u;
}

std::int64_t h0_split(const SplittingType &e)
{
    std::int64_t h0 = 0;
    for (const auto x : e.entries()) {
        h0 += std::max<std::int64_t>(0, x + 1);
    }
    return h0;
}

std::int64_t h1_split(const SplittingType &e)
{
    std::int64_t h1 = 0;
    for (const auto x : e.entries()) {
        h1 += std::max<std::int64_t>(0, -x - 1);
    }
    return h1;
}

bool dominance_leq(const SplittingType &low, const SplittingType &high)
{
    if (low.rank() != high.rank()) {
        throw DomainError("cannot compare " + low.to_string() + " and " + high.to_string() + ": rank mismatch");
    }
    if (low.sum() != high.sum()) {
        throw DomainError("cannot compare " + low.to_string() + " and " + high.to_string()
                          + ": total degree mismatch");
    }
    std::int64_t low_prefix = 0;
    std::int64_t high_prefix = 0;
    for (std::size_t j = 0; j < low.rank(); ++j) {
        low_prefix += low[j];
        high_prefix += high[j];
        if (low_prefix > high_prefix) {
            return false;
        }
    }
    return true;
}

std::int64_t default_spread_bound(std::int64_t genus)
{
    return genus + 2;
}

std::vector<SplittingType> enumerate_types(const DegreeDatum &datum, std::int64_t spread_bound)
{
    if (datum.k < 1) {
        throw ValidationError("cover degree must be at least 1");
    }
    if (spread_bound < 0) {
        throw ValidationError("spread bound must be non-negative");
    }
    const auto k = datum.k;
    const auto total = datum.splitting_sum();
    std::vector<SplittingType> out;
    std::vector<std::int64_t> current(static_cast<std::size_t>(k));

    // Fills slots [pos, k) with non-decreasing values in [floor, cap] summing to rest.
    std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> fill =
        [&](std::int64_t pos, std::int64_t floor, std::int64_t cap, std::int64_t rest) {
            const auto slots = k - pos;
            if (slots == 0) {
                if (rest == 0) {
                    out.emplace_back(current);
                }
                return;
            }
            for (auto v = floor; v <= cap && v * slots <= rest; ++v) {
                if (v + cap * (slots - 1) < rest) {
                    continue;
                }
                current[static_cast<std::size_t>(pos)] = v;
                fill(pos + 1, v, cap, rest - v);
            }
        };

    const auto first_lo = ceil_div(total - (k - 1) * spread_bound, k);
    const auto first_hi = floor_div(total, k);
    for (auto first = first_lo; first <= first_hi; ++first) {
        current[0] = first;
        fill(1, first, first + spread_bound, total - first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> hasse_edges(std::span<const SplittingType> types)
{
    std::vector<SplittingType> nodes(types.begin(), types.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const auto count = nodes.size();
    if (count < 2) {
        return {};
    }

    // above[i] / below[j] as packed bitsets over node indices (strict relations).
    const auto words = (count + 63) / 64;
    std::vector<std::uint64_t> above(count * words, 0);
    std::vector<std::uint64_t> below(count * words, 0);
    auto set_bit = [words](std::vector<std::uint64_t> &rows, std::size_t row, std::size_t col) {
        rows[row * words + col / 64] |= std::uint64_t{1} << (col % 64);
    };
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i != j && dominance_leq(nodes[i], nodes[j])) {
                set_bit(above, i, j);
                set_bit(below, j, i);
            }
        }
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if ((above[i * words + j / 64] >> (j % 64) & 1U) == 0) {
                continue;
            }
            // i < j is a cover iff nothing lies strictly between them.
            bool covered = true;
            for (std::size_t w = 0; w < words && covered; ++w) {
                covered = (above[i * words + w] & below[j * words + w]) == 0;
            }
            if (covered) {
                edges.emplace_back(nodes[i], nodes[j]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace strata
