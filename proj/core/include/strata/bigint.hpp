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

#ifndef STRATA_BIGINT_HPP
#define STRATA_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace strata
{

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient. Zero when k < 0 or k > n; n must be non-negative.
BigInt binomial(std::int64_t n, std::int64_t k);

std::string to_string(const BigInt &value);

} // namespace strata

#endif
