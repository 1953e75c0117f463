// Copyright 2026 The Authors.
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

#ifndef PREDIM_ERRORS_H_
#define PREDIM_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace predim {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters: composite modulus, out-of-range residue, k = 0, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands live over different primes or in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured item limit.
class GuardrailExceeded : public Error {
 public:
  GuardrailExceeded(std::uint64_t required, std::uint64_t limit)
      : Error("enumeration needs " + std::to_string(required) +
              " items, guardrail is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

// A mathematical invariant the algorithms rely on was observed to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace predim

#endif  // PREDIM_ERRORS_H_
