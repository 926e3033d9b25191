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

#ifndef STRATA_ERROR_HPP
#define STRATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace strata
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: empty splitting type, invalid (genus, Maroni) pair, bad flag value.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// Arguments that are well formed but outside the modeled range, e.g. comparing
/// splitting types of different rank or total degree.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// An operation was called outside the regime where its result is established.
class ContractError : public Error
{
public:
    using Error::Error;
};

/// Enumeration would exceed a hard size guard.
class ResourceError : public Error
{
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error
{
public:
    using Error::Error;
};

} // namespace strata

#endif
