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

#ifndef PREDIM_LITERALS_H_
#define PREDIM_LITERALS_H_

// Text literals shared by the CLI and the file formats:
//   vector    "1,0,1"          comma-separated residues
//   subspace  "1,0,0;0,1,0"    semicolon-separated vectors (may be empty)

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "predim/fp_linalg.h"

namespace predim {

FpVector ParseVector(std::string_view text, std::uint32_t p,
                     std::size_t n);
// A possibly empty list of vectors; they need not be independent.
std::vector<FpVector> ParseVectorList(std::string_view text, std::uint32_t p,
                                      std::size_t n);
Subspace ParseSubspace(std::string_view text, std::uint32_t p, std::size_t n);

std::string FormatVector(const FpVector& v);
// Canonical basis rows joined by ';'. The zero subspace renders as "0".
std::string FormatSubspace(const Subspace& s);

}  // namespace predim

#endif  // PREDIM_LITERALS_H_
