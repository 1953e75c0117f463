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

#include "predim/free_case.h"

#include <random>
#include <sstream>

#include "predim/errors.h"

namespace predim {

BilinearStructure FreeStructure(std::size_t n, std::uint32_t p,
                                std::uint32_t k) {
  CheckPrime(p);
  return BilinearStructure(p, n, k, Subspace::Zero(p, WedgeDim(n)));
}

std::vector<std::uint64_t> GSequence(std::size_t count) {
  if (count == 0) throw InvalidArgument("count must be at least 1");
  if (count > 63) throw InvalidArgument("g-sequence overflows 64 bits");
  std::vector<std::uint64_t> g{1};
  while (g.size() < count) g.push_back(2 * g.back() + 1);
  return g;
}

FreeWitness MakeFreeWitness(std::size_t m, std::uint32_t p, std::size_t n) {
  if (2 * m > n) throw InvalidArgument("ambient too small for w_m");
  std::vector<FpVector> basis;
  for (std::size_t i = 0; i < 2 * m; ++i) {
    basis.push_back(FpVector::Unit(p, n, i));
  }
  FreeWitness out{m, BuildW(m, basis), 0, std::nullopt};
  out.rank = BivectorRank(out.w);
  // m = g(i) = 2^{i+1} - 1.
  for (std::size_t i = 0; i < 63; ++i) {
    if ((std::uint64_t{2} << i) - 1 == m) out.g_index = i;
  }
  return out;
}

std::vector<FreeWitness> OrbitSeparationWitnesses(std::size_t count,
                                                  std::uint32_t p,
                                                  std::uint64_t guardrail) {
  CheckPrime(p);
  const std::vector<std::uint64_t> g = GSequence(count);
  const std::uint64_t n = 2 * g.back();
  if (WedgeDim(n) > guardrail) throw GuardrailExceeded(WedgeDim(n), guardrail);
  std::vector<FreeWitness> out;
  for (std::uint64_t m : g) out.push_back(MakeFreeWitness(m, p, n));
  return out;
}

std::string DescribeOrbitSeparation(
    const std::vector<FreeWitness>& witnesses) {
  std::ostringstream out;
  bool distinct = true;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      distinct = distinct && witnesses[i].rank != witnesses[j].rank;
    }
  }
  if (distinct) {
    out << witnesses.size()
        << " elements w_g(i), all defined the same way, have pairwise "
           "distinct ranks and so lie in "
        << witnesses.size()
        << " distinct orbits; this count grows without bound with the "
           "number of witnesses, so the free structure on an infinite M has "
           "infinitely many such orbits and is not aleph_0-categorical.";
  } else {
    out << "witness ranks are not pairwise distinct; orbit separation fails";
  }
  return out.str();
}

Lemma41Verdict VerifyLemma41(std::size_t m, std::uint32_t p,
                             std::uint64_t guardrail, std::uint64_t seed,
                             std::size_t samples_per_dim) {
  CheckPrime(p);
  const std::size_t n = 2 * m;
  const FreeWitness witness = MakeFreeWitness(m, p, n);
  const FpVector& w = witness.w.coords();

  Lemma41Verdict verdict;
  verdict.m = m;
  verdict.p = p;
  verdict.exhaustive = true;

  // Supporting subspaces form an up-set (Lambda^2 is monotone), so a downward
  // scan that stops at the first dimension without support sees every E.
  std::size_t least = n;
  std::optional<Subspace> lowest;
  for (std::size_t d = n; d-- > 0;) {
    if (CountSubspacesOfDim(n, d, p) > guardrail) {
      verdict.exhaustive = false;
      break;
    }
    std::optional<Subspace> support;
    ForEachSubspaceOfDim(n, d, p, [&](const Subspace& e) {
      ++verdict.subspaces_checked;
      if (!Lambda2Embed(e).Contains(w)) return true;
      support = e;
      return false;
    });
    if (!support) break;
    least = d;
    lowest = std::move(support);
  }

  if (!verdict.exhaustive) {
    verdict.subspaces_checked = 0;
    least = n;
    lowest.reset();
    std::mt19937_64 rng(seed);
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t s = 0; s < samples_per_dim; ++s) {
        std::vector<FpVector> gens;
        for (std::size_t g = 0; g < d; ++g) {
          std::vector<std::uint32_t> coords(n);
          for (auto& c : coords) c = static_cast<std::uint32_t>(rng() % p);
          gens.emplace_back(p, std::move(coords));
        }
        const Subspace e = Subspace::Span(gens, p, n);
        ++verdict.subspaces_checked;
        if (e.dim() < least && Lambda2Embed(e).Contains(w)) {
          least = e.dim();
          lowest = e;
        }
      }
    }
  }

  verdict.observed_threshold = least;
  verdict.sharp_bound_holds = least >= 2 * m;
  verdict.holds = least >= m;
  if (!verdict.holds) verdict.counterexample = lowest;
  return verdict;
}

}  // namespace predim
