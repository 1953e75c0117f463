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

#ifndef PREDIM_STRUCTURE_H_
#define PREDIM_STRUCTURE_H_

// An alternating bilinear map beta: M x M -> W over F_p, held in pair form
// (M, N(beta)) where N(beta) <= Lambda^2 M is the kernel of the induced map
// Lambda^2 M -> W. W itself is never stored; it is Lambda^2 M / N(beta).
//
// Structure file format (line oriented, '#' starts a comment):
//
//   p 2
//   dim 3
//   k 1
//   rel 1 0 0
//
// N(beta) is the span of all `rel` lines, each WedgeDim(dim) residues in
// wedge-basis order. Serialization writes the canonical RREF basis.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "predim/exterior.h"
#include "predim/fp_linalg.h"

namespace predim {

// The predimension k * dim(H) - dim(N(H)), i.e. delta_k(H) scaled by k so
// that all comparisons are exact integer comparisons.
struct ScaledDelta {
  std::int64_t value = 0;
  std::uint32_t k = 1;

  // Exact rational value/k in lowest terms, e.g. "3/2" or "-1".
  std::string Rational() const;

  friend bool operator==(const ScaledDelta& a, const ScaledDelta& b) {
    return a.value == b.value;
  }
  friend std::strong_ordering operator<=>(const ScaledDelta& a,
                                          const ScaledDelta& b) {
    return a.value <=> b.value;
  }
};

class BilinearStructure {
 public:
  BilinearStructure(std::uint32_t p, std::size_t n, std::uint32_t k,
                    Subspace relations);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  const Subspace& relations() const { return relations_; }

  BilinearStructure WithK(std::uint32_t k) const;

  friend bool operator==(const BilinearStructure&,
                         const BilinearStructure&) = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::uint32_t k_;
  Subspace relations_;
};

// N(H) = N(beta) intersected with Lambda^2 H.
Subspace NOf(const BilinearStructure& s, const Subspace& h);

ScaledDelta Delta(const BilinearStructure& s, const Subspace& h);

// beta(u, v) as the canonical representative of u ^ v modulo N(beta).
Bivector BetaMap(const BilinearStructure& s, const FpVector& u,
                 const FpVector& v);

struct FewRelationsVerdict {
  bool holds = true;
  // First violating subspace of least dimension, in canonical order.
  std::optional<Subspace> witness;
  std::size_t witness_relations_dim = 0;
};

// Exhaustive check of dim N(H) <= k dim H over every subspace of M.
FewRelationsVerdict CheckFewRelations(const BilinearStructure& s,
                                      std::uint64_t guardrail =
                                          kDefaultGuardrail);

BilinearStructure ParseStructure(std::string_view text);
std::string SerializeStructure(const BilinearStructure& s);

}  // namespace predim

#endif  // PREDIM_STRUCTURE_H_
