// Copyright 2025 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace bfml {

// Base class for all library errors. Undefined minors are not errors; they
// are reported as empty optionals so enumeration can record them.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BadEmptySetValue : Error {
  using Error::Error;
};
struct SizeMismatch : Error {
  using Error::Error;
};
struct DuplicateLabel : Error {
  using Error::Error;
};
struct OrderTooLarge : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NonIntegerRank : Error {
  using Error::Error;
};
struct NotRankable : Error {
  using Error::Error;
};
struct NonRationalValue : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct UnknownTheorem : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace bfml
