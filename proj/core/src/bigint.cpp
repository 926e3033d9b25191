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

#include "strata/bigint.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata
{

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw DomainError("binomial: top index must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // Each partial product result * (n - i) / (i + 1) is itself a binomial, so the division is exact.
    for (std::int64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

std::string to_string(const BigInt &value)
{
    return value.str();
}

} // namespace strata
