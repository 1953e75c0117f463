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

#include "predim/structure.h"

#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "predim/errors.h"

namespace predim {
namespace {

void CheckAmbient(const BilinearStructure& s, const Subspace& h) {
  if (h.p() != s.p() || h.ambient_dim() != s.n()) {
    throw DimensionMismatch("subspace does not live in the structure's M");
  }
}

std::uint64_t ParseUnsigned(std::string_view token, int line_no) {
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == ',')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != ',') {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::string ScaledDelta::Rational() const {
  const std::int64_t g = std::gcd(value, static_cast<std::int64_t>(k));
  const std::int64_t num = g == 0 ? 0 : value / g;
  const std::int64_t den = g == 0 ? 1 : static_cast<std::int64_t>(k) / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

BilinearStructure::BilinearStructure(std::uint32_t p, std::size_t n,
                                     std::uint32_t k, Subspace relations)
    : p_(p), n_(n), k_(k), relations_(std::move(relations)) {
  CheckPrime(p);
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (relations_.p() != p || relations_.ambient_dim() != WedgeDim(n)) {
    throw DimensionMismatch("relations must live in Lambda^2 of F_" +
                            std::to_string(p) + "^" + std::to_string(n));
  }
}

BilinearStructure BilinearStructure::WithK(std::uint32_t k) const {
  return BilinearStructure(p_, n_, k, relations_);
}

Subspace NOf(const BilinearStructure& s, const Subspace& h) {
  CheckAmbient(s, h);
  return Intersect(s.relations(), Lambda2Embed(h));
}

ScaledDelta Delta(const BilinearStructure& s, const Subspace& h) {
  const auto relations_dim = static_cast<std::int64_t>(NOf(s, h).dim());
  return {static_cast<std::int64_t>(s.k()) *
                  static_cast<std::int64_t>(h.dim()) -
              relations_dim,
          s.k()};
}

Bivector BetaMap(const BilinearStructure& s, const FpVector& u,
                 const FpVector& v) {
  if (u.p() != s.p() || u.size() != s.n()) {
    throw DimensionMismatch("vector does not live in the structure's M");
  }
  return Bivector(s.n(), s.relations().Reduce(Wedge(u, v).coords()));
}

FewRelationsVerdict CheckFewRelations(const BilinearStructure& s,
                                      std::uint64_t guardrail) {
  FewRelationsVerdict verdict;
  // Canonical order is dimension-major, so the first hit has least dimension.
  for (const Subspace& h : EnumerateSubspaces(s.n(), s.p(), guardrail)) {
    const std::size_t rel = NOf(s, h).dim();
    if (rel > static_cast<std::size_t>(s.k()) * h.dim()) {
      verdict.holds = false;
      verdict.witness = h;
      verdict.witness_relations_dim = rel;
      return verdict;
    }
  }
  return verdict;
}

BilinearStructure ParseStructure(std::string_view text) {
  std::optional<std::uint64_t> p, n, k;
  std::vector<std::pair<int, std::vector<std::string_view>>> rel_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens = Tokens(line);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0];
    tokens.erase(tokens.begin());
    auto single = [&](std::optional<std::uint64_t>& slot) {
      if (tokens.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) + ": '" +
                         std::string(key) + "' takes one value");
      }
      if (slot) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate '" +
                         std::string(key) + "'");
      }
      slot = ParseUnsigned(tokens[0], line_no);
    };
    if (key == "p") {
      single(p);
    } else if (key == "dim") {
      single(n);
    } else if (key == "k") {
      single(k);
    } else if (key == "rel") {
      rel_lines.emplace_back(line_no, std::move(tokens));
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!p || !n || !k) throw ParseError("structure needs 'p', 'dim' and 'k'");
  if (*p > kMaxPrime || !IsPrime(*p)) {
    throw ParseError("p = " + std::to_string(*p) + " is not a prime");
  }
  if (*k == 0 || *k > UINT32_MAX) throw ParseError("k must be at least 1");
  if (*n > 4096) throw ParseError("dim is unreasonably large");
  const auto prime = static_cast<std::uint32_t>(*p);
  const std::size_t wedge_dim = WedgeDim(*n);
  std::vector<FpVector> rels;
  for (const auto& [rel_line, tokens] : rel_lines) {
    if (tokens.size() != wedge_dim) {
      throw ParseError("line " + std::to_string(rel_line) + ": 'rel' needs " +
                       std::to_string(wedge_dim) + " residues, got " +
                       std::to_string(tokens.size()));
    }
    std::vector<std::uint32_t> coords;
    for (std::string_view t : tokens) {
      const std::uint64_t v = ParseUnsigned(t, rel_line);
      if (v >= prime) {
        throw ParseError("line " + std::to_string(rel_line) + ": residue " +
                         std::string(t) + " out of range");
      }
      coords.push_back(static_cast<std::uint32_t>(v));
    }
    rels.emplace_back(prime, std::move(coords));
  }
  return BilinearStructure(prime, *n, static_cast<std::uint32_t>(*k),
                           Subspace::Span(rels, prime, wedge_dim));
}

std::string SerializeStructure(const BilinearStructure& s) {
  std::ostringstream out;
  out << "p " << s.p() << "\n"
      << "dim " << s.n() << "\n"
      << "k " << s.k() << "\n";
  for (std::size_t i = 0; i < s.relations().dim(); ++i) {
    out << "rel";
    for (std::uint32_t c : s.relations().row(i)) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace predim
