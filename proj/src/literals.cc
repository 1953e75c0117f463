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

#include "predim/literals.h"

#include <charconv>
#include <string>

#include "predim/errors.h"

namespace predim {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

FpVector ParseVector(std::string_view text, std::uint32_t p, std::size_t n) {
  CheckPrime(p);
  text = Trim(text);
  std::vector<std::uint32_t> coords;
  if (!text.empty()) {
    for (std::string_view token : Split(text, ',')) {
      token = Trim(token);
      std::uint64_t value = 0;
      const auto [end, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() ||
          end != token.data() + token.size()) {
        throw ParseError("malformed residue '" + std::string(token) + "'");
      }
      if (value >= p) {
        throw ParseError("residue " + std::string(token) +
                         " out of range for p = " + std::to_string(p));
      }
      coords.push_back(static_cast<std::uint32_t>(value));
    }
  }
  if (coords.size() != n) {
    throw ParseError("vector literal '" + std::string(text) + "' has " +
                     std::to_string(coords.size()) + " entries, expected " +
                     std::to_string(n));
  }
  return FpVector(p, std::move(coords));
}

std::vector<FpVector> ParseVectorList(std::string_view text, std::uint32_t p,
                                      std::size_t n) {
  std::vector<FpVector> out;
  text = Trim(text);
  if (text.empty()) return out;
  for (std::string_view part : Split(text, ';')) {
    out.push_back(ParseVector(part, p, n));
  }
  return out;
}

Subspace ParseSubspace(std::string_view text, std::uint32_t p,
                       std::size_t n) {
  if (Trim(text) == "0") return Subspace::Zero(p, n);
  return Subspace::Span(ParseVectorList(text, p, n), p, n);
}

std::string FormatVector(const FpVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string FormatSubspace(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i > 0) out += ';';
    out += FormatVector(s.BasisVector(i));
  }
  return out;
}

}  // namespace predim
