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

#ifndef PREDIM_FREE_CASE_H_
#define PREDIM_FREE_CASE_H_

// The free alternating bilinear map <M, Lambda^2 M, ^> (no relations) and
// the test elements w_m = sum_{i<m} a_{2i} ^ a_{2i+1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "predim/exterior.h"
#include "predim/fp_linalg.h"
#include "predim/structure.h"

namespace predim {

BilinearStructure FreeStructure(std::size_t n, std::uint32_t p,
                                std::uint32_t k);

// g(0) = 1, g(i+1) = 2 g(i) + 1.
std::vector<std::uint64_t> GSequence(std::size_t count);

struct FreeWitness {
  std::size_t m = 0;
  Bivector w;
  std::size_t rank = 0;
  // i with m = g(i), when m lies on the g-sequence.
  std::optional<std::size_t> g_index;
};

// w_m over the first 2m standard basis vectors of F_p^n (n >= 2m).
FreeWitness MakeFreeWitness(std::size_t m, std::uint32_t p, std::size_t n);

// The witnesses w_{g(0)}, ..., w_{g(count-1)} in the common ambient of
// dimension 2 g(count-1). Their ranks 2 g(i) are pairwise distinct, and rank
// is invariant under change of basis, so they lie in distinct orbits.
// The guardrail bounds the wedge dimension of that ambient.
std::vector<FreeWitness> OrbitSeparationWitnesses(
    std::size_t count, std::uint32_t p,
    std::uint64_t guardrail = kDefaultGuardrail);

// Prose verdict for the orbit witnesses.
std::string DescribeOrbitSeparation(const std::vector<FreeWitness>& witnesses);

struct Lemma41Verdict {
  std::size_t m = 0;
  std::uint32_t p = 2;
  bool exhaustive = false;
  // No E <= <A> with dim E < m has w_m in Lambda^2 E.
  bool holds = true;
  // No E <= <A> with dim E < 2m has w_m in Lambda^2 E.
  bool sharp_bound_holds = true;
  // Least dim E with w_m in Lambda^2 E among the subspaces examined.
  std::optional<std::size_t> observed_threshold;
  std::uint64_t subspaces_checked = 0;
  std::optional<Subspace> counterexample;
};

// Checks w_m against the subspaces E of <A> = F_p^{2m}, A the standard
// basis. Exhaustive mode scans dimensions downward from the hyperplanes and
// stops at the first dimension with no supporting E; this covers every E
// because Lambda^2 is monotone. Each scanned dimension must fit the
// guardrail, otherwise the check draws `samples_per_dim` seeded random
// subspaces of every dimension below 2m instead.
Lemma41Verdict VerifyLemma41(std::size_t m, std::uint32_t p,
                             std::uint64_t guardrail = kDefaultGuardrail,
                             std::uint64_t seed = 42,
                             std::size_t samples_per_dim = 200);

}  // namespace predim

#endif  // PREDIM_FREE_CASE_H_
