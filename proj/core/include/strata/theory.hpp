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

#ifndef STRATA_THEORY_HPP
#define STRATA_THEORY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strata/bigint.hpp"
#include "strata/hirzebruch.hpp"
#include "strata/splitting.hpp"

namespace strata
{

/// A trigonal curve class (genus, Maroni invariant, generality) together with the
/// degree d of the line bundles being stratified. Rank-3 strata have sum d - g - 2.
struct TrigonalContext {
    MaroniDatum md;
    std::int64_t degree = 0;
    // Whether C is taken general among curves of Maroni invariant n. Only the
    // component and point counts depend on it.
    bool general_curve = true;
    bool char_zero = true;

    [[nodiscard]] std::int64_t genus() const noexcept
    {
        return md.genus();
    }
    [[nodiscard]] std::int64_t maroni() const noexcept
    {
        return md.maroni();
    }
    [[nodiscard]] std::int64_t stratum_sum() const noexcept
    {
        return degree - md.genus() - 2;
    }

    friend bool operator==(const TrigonalContext &, const TrigonalContext &) = default;
};

/// Validating constructor; throws ValidationError.
TrigonalContext make_context(std::int64_t genus, std::int64_t maroni, std::int64_t degree, bool general_curve = true);

/// Degree d of the line bundles whose pushforward has splitting type e.
std::int64_t degree_of(std::int64_t genus, const SplittingType &e);

enum class Flavor { I, II, III };
enum class ClosureStatus { empty, point, irreducible, unresolved };
enum class OpenStatus { empty, finite, irreducible, connected_reducible, unknown };
enum class Generality { all_curves, general_maroni_n };

std::string to_string(Flavor flavor);
std::string to_string(ClosureStatus status);
std::string to_string(OpenStatus status);
std::string to_string(Generality generality);

/// I when b - a <= 1 (takes precedence), II when c - b <= 1, III otherwise.
Flavor flavor_of(const SplittingType &e);

/// Full classification of one rank-3 splitting stratum.
struct StratumReport {
    SplittingType e;
    Flavor flavor = Flavor::I;
    std::optional<std::int64_t> alpha{}; // flavor III only
    std::int64_t expected_codim = 0;
    std::int64_t expected_dim = 0;

    ClosureStatus closure_status = ClosureStatus::unresolved;
    std::optional<std::int64_t> closure_dim{};

    OpenStatus open_status = OpenStatus::unknown;
    std::optional<std::int64_t> open_dim{};
    std::optional<BigInt> component_count{};
    std::optional<BigInt> point_count{};
    Generality generality = Generality::all_curves;

    // Open stratum is non-empty with dimension != expected, or empty although expected
    // dimension is non-negative.
    bool anomalous = false;
    // Set by deduce_empty_open: a smaller stratum whose closure swallows this one.
    std::optional<SplittingType> empty_witness{};

    /// The open stratum is known to be non-empty.
    [[nodiscard]] bool certified_nonempty() const noexcept;
    /// Dimension used to place the stratum in a diagram: the open dimension when
    /// known, else the closure dimension, else the expected dimension.
    [[nodiscard]] std::int64_t display_dim() const noexcept;

    friend bool operator==(const StratumReport &, const StratumReport &) = default;
};

/// alpha = (g + n)/2 + 1 - c + a, the twist of the subcanonical system E + alpha F.
std::int64_t alpha_of(const TrigonalContext &ctx, const SplittingType &e);

StratumReport classify(const TrigonalContext &ctx, const SplittingType &e);

/// Number of irreducible components of a flavor-III stratum with 0 <= alpha <= n - 1,
/// for general C: sum over max(0, b-a-n) <= m <= (g-n)/2 + 1 + b - c of
/// binom((g-3n)/2 + 1, m). Throws ContractError outside that regime or when the
/// stratum is empty.
BigInt component_count(const TrigonalContext &ctx, const SplittingType &e);

/// binom(c - a - 2n, b - a - n) for flavor III with alpha = 0 on a general curve.
BigInt point_count(const TrigonalContext &ctx, const SplittingType &e);

/// Class of the closure in the Jacobian, multiplier * theta^theta_power / theta_power!.
struct ClassCoefficient {
    BigInt multiplier;
    std::int64_t theta_power = 0;

    friend bool operator==(const ClassCoefficient &, const ClassCoefficient &) = default;
};

ClassCoefficient class_coefficient(const SplittingType &e);
/// As class_coefficient, but throws ContractError when the stratum does not occur in
/// the expected dimension for ctx.
ClassCoefficient class_coefficient_checked(const TrigonalContext &ctx, const SplittingType &e);

struct BNComponent {
    SplittingType type;
    std::int64_t dimension = 0;

    friend bool operator==(const BNComponent &, const BNComponent &) = default;
};

/// Components of W^r_d(C) for a trigonal curve, via the two splitting loci that
/// carry them.
struct BNLocusReport {
    std::int64_t g = 0;
    std::int64_t d = 0;
    std::int64_t r = 0;
    std::int64_t rho = 0;
    std::vector<BNComponent> components;
};

/// Brill-Noether number g - (r + 1)(g - d + r).
std::int64_t brill_noether_number(std::int64_t g, std::int64_t r, std::int64_t d);

/// Requires r >= 1 and g - d + r >= 1 (DomainError otherwise). Throws
/// ConsistencyError if a component dimension disagrees with g - u of its type.
BNLocusReport bn_components(std::int64_t g, std::int64_t d, std::int64_t r);

/// If the closure of e is irreducible of dimension D (flavors I and II) and some
/// strictly smaller e' has a certified non-empty open stratum of dimension >= D,
/// the closures coincide and the open stratum of e is empty. Applies that rule over
/// the snapshot and returns the updated reports in input order.
std::vector<StratumReport> deduce_empty_open(const TrigonalContext &ctx, std::span<const StratumReport> reports);

/// Enumerates the universe for ctx, classifies each type and runs deduce_empty_open.
std::vector<StratumReport> classify_universe(const TrigonalContext &ctx, std::int64_t spread_bound);

} // namespace strata

#endif
