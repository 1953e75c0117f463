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

#ifndef PREDIM_PROPCHECK_H_
#define PREDIM_PROPCHECK_H_

// Structure catalogs and one exhaustive/sampled check per closure-calculus
// lemma.
//
// Lemma ids:
//   L3.1        submodularity of delta and its two corollaries
//   L3.2        intersections of selfsufficient subspaces
//   L3.3        cl_k is extensive, monotone and idempotent
//   L4.1        w_m has no support of dimension below m; rank(w_m) = 2m
//   L5.1        minimal extensions are contained in or independent of L
//   L5.2        N(L+K) = N(L) + N(K) inside the closure
//   T6.1-chain  the closure chain reaches cl_k(H)
//   DREL        min and closed forms of the relative predimension agree
//   CSS-oracle  css equals the intersection of selfsufficient superspaces
//
// Every result is a pure function of the catalog configuration, so runs are
// replayable and independent of the worker count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "predim/closure.h"
#include "predim/fp_linalg.h"
#include "predim/structure.h"

namespace predim {

enum class CatalogMode { kExhaustive, kSampled };

std::string_view ModeName(CatalogMode mode);

struct CatalogPoint {
  CatalogMode mode = CatalogMode::kExhaustive;
  std::uint32_t p = 2;
  std::size_t n = 3;
  std::uint32_t k = 1;
  // Sampled mode only.
  std::size_t samples = 0;
};

struct CatalogConfig {
  std::vector<CatalogPoint> points;
  std::uint64_t seed = 42;
  std::uint64_t guardrail = kDefaultGuardrail;

  // Exhaustive p = 2, n = 1..4, k = 1..3, plus seeded samples at p = 2, 3,
  // n = 4, k = 1..3.
  static CatalogConfig Default(std::uint64_t seed = 42,
                               std::size_t samples = 25);
  // Exhaustive p, n = 1..max_n, k = 1..3.
  static CatalogConfig Exhaustive(std::uint32_t p, std::size_t max_n);
};

struct CatalogEntry {
  BilinearStructure structure;
  // Tagged by CheckFewRelations; failing structures stay in the catalog.
  bool few_relations = true;
  // Index into CatalogConfig::points.
  std::size_t point = 0;
};

// Exhaustive points enumerate every relation subspace of the wedge ambient;
// sampled points span a uniform number of uniform random generators.
std::vector<CatalogEntry> GenerateCatalog(const CatalogConfig& config);

inline constexpr std::array<std::string_view, 9> kLemmaIds = {
    "L3.1", "L3.2", "L3.3",       "L4.1",      "L5.1",
    "L5.2", "DREL", "T6.1-chain", "CSS-oracle"};

bool IsKnownLemma(std::string_view id);

struct SuiteOptions {
  std::size_t workers = 1;
  // Perturbs every engine's predimension table (fault injection).
  ClosureEngine::DeltaAdjust delta_fault;
};

struct SuiteResult {
  std::string lemma_id;
  std::uint64_t instances = 0;
  std::uint64_t structures = 0;
  bool pass = true;
  // First failure in catalog order: structure file plus the subspaces.
  std::optional<std::string> counterexample;
  std::uint64_t seed = 0;
  std::int64_t time_ms = 0;
  // One line per parameter point and how it was covered.
  std::vector<std::string> coverage;
};

// Throws InvalidArgument for unknown ids.
SuiteResult RunSuite(std::string_view lemma_id, const CatalogConfig& config,
                     const std::vector<CatalogEntry>& catalog,
                     const SuiteOptions& options = {});

// `SUITE <id> <pass|fail> instances=<n> seed=<s> time_ms=<t>`, followed by
// the indented counterexample when failing. Without timing, time_ms is "-".
std::string RenderSuiteMachine(const SuiteResult& result, bool timing = true);
std::string RenderSuiteText(const SuiteResult& result, bool timing = true);

}  // namespace predim

#endif  // PREDIM_PROPCHECK_H_
