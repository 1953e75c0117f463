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

#ifndef PREDIM_CLOSURE_H_
#define PREDIM_CLOSURE_H_

// Selfsufficiency, selfsufficient closure, the combinatorial closure cl_k,
// relative predimension and minimal extensions, all computed exactly over
// the finite ambient M = F_p^n.
//
// "For every finite subspace K of M" is read as "for every subspace of the
// finite ambient", so every quantifier becomes a scan of the subspace
// lattice. ClosureEngine precomputes the predimension of every lattice
// element once and answers all queries from index tables.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "predim/errors.h"
#include "predim/fp_linalg.h"
#include "predim/lattice.h"
#include "predim/structure.h"

namespace predim {

// Thrown when an operation requires a selfsufficient base subspace.
class NotSelfsufficient : public Error {
 public:
  NotSelfsufficient(Subspace subspace, Subspace witness)
      : Error("subspace is not selfsufficient"),
        subspace_(std::move(subspace)),
        witness_(std::move(witness)) {}
  const Subspace& subspace() const { return subspace_; }
  // A superspace with strictly smaller predimension.
  const Subspace& witness() const { return witness_; }

 private:
  Subspace subspace_;
  Subspace witness_;
};

// Thrown when the minimum and closed-form routes for the relative
// predimension disagree.
class FormulaMismatch : public InternalError {
 public:
  using InternalError::InternalError;
};

// The subspace lattice of F_p^n together with Lambda^2 of every element.
// Independent of the relations, so one instance serves every structure on
// the same (p, n).
class Ambient {
 public:
  Ambient(std::size_t n, std::uint32_t p,
          std::uint64_t guardrail = kDefaultGuardrail);

  const SubspaceLattice& lattice() const { return lattice_; }
  const Subspace& Lambda2(std::size_t i) const { return lambda2_[i]; }

 private:
  SubspaceLattice lattice_;
  std::vector<Subspace> lambda2_;
};

struct SelfsufficiencyVerdict {
  bool selfsufficient = true;
  // First superspace (canonical order) of least predimension, when that
  // predimension is below the subspace's own.
  std::optional<Subspace> witness;
};

struct ClosureSet {
  // { a in M : a in cl_k(B) }, in lexicographic vector order.
  std::vector<FpVector> members;
  // Set when the members form a subspace.
  std::optional<Subspace> subspace;
};

struct RelativeDelta {
  // min delta(K1) - delta(K1 n H) over K1 + H = K + H with K1 n H
  // selfsufficient.
  ScaledDelta minimum;
  // k dim(K+H / H) - dim(N(K+H) / N(H)).
  ScaledDelta closed_form;
  // First K1 (canonical order) attaining the minimum.
  Subspace attained_by;
};

struct ChainStep {
  Subspace base;
  // Minimal extensions of base lying inside the closure, canonical order.
  std::vector<Subspace> extensions;
};

// The iteration H = H_0 < H_1 < ... with H_{i+1} = H_i + (its minimal
// extensions inside cl_k(H)).
struct ClosureReport {
  Subspace input;
  Subspace css;
  ScaledDelta dk;
  ClosureSet closure;
  std::vector<Subspace> chain;
  std::vector<ChainStep> steps;
  // Final chain member equals the closure subspace.
  bool reaches_closure = false;
};

class ClosureEngine {
 public:
  // Optional override of the predimension table, indexed by lattice
  // position. Used to inject faults when testing the lemma suites.
  using DeltaAdjust = std::function<std::int64_t(std::size_t, std::int64_t)>;

  explicit ClosureEngine(const BilinearStructure& s,
                         std::uint64_t guardrail = kDefaultGuardrail);
  ClosureEngine(const BilinearStructure& s,
                std::shared_ptr<const Ambient> ambient,
                const DeltaAdjust& adjust = nullptr);

  const BilinearStructure& structure() const { return structure_; }
  const Ambient& ambient() const { return *ambient_; }
  const SubspaceLattice& lattice() const { return ambient_->lattice(); }

  ScaledDelta Delta(const Subspace& h) const;
  SelfsufficiencyVerdict CheckSelfsufficient(const Subspace& h) const;
  bool IsSelfsufficient(const Subspace& h) const;
  // The least selfsufficient superspace of h.
  Subspace Css(const Subspace& h) const;
  // delta(css(span(a))).
  ScaledDelta Dk(std::span<const FpVector> a) const;
  // A is in cl_k(B): delta(css(<B>)) == delta(css(<A u B>)).
  bool InClosure(std::span<const FpVector> a,
                 std::span<const FpVector> b) const;
  ClosureSet ClosureOf(const Subspace& b) const;
  // Requires h selfsufficient; throws FormulaMismatch if the two routes
  // disagree.
  RelativeDelta DeltaRel(const Subspace& k, const Subspace& h) const;
  // Requires h selfsufficient.
  std::vector<Subspace> MinimalExtensions(const Subspace& h) const;
  // Requires h selfsufficient.
  ClosureReport Chain(const Subspace& h) const;

  // Index-level access for the exhaustive suites.
  std::int64_t delta_at(std::size_t i) const { return delta_[i]; }
  std::size_t relations_dim_at(std::size_t i) const {
    return relations_dim_[i];
  }
  Subspace NOfAt(std::size_t i) const;
  bool selfsufficient_at(std::size_t i) const { return selfsufficient_[i]; }
  // First minimum-dimension minimizer of delta over the superspaces of i.
  std::size_t css_at(std::size_t i) const { return css_[i]; }
  // False when that minimizer is not unique, which would contradict the
  // intersection property of selfsufficient subspaces.
  bool css_unique_at(std::size_t i) const { return css_unique_[i]; }
  bool InClosureAt(std::size_t code, std::size_t b) const;
  // Bit per vector code: membership in cl_k(at(b)).
  std::vector<bool> ClosureMembersAt(std::size_t b) const;
  // Index of cl_k(at(b)) when it is a subspace.
  std::optional<std::size_t> ClosureIndexAt(std::size_t b) const;
  // For selfsufficient h: entry t is the min-route relative predimension
  // of any K with K + H = at(t), or nullopt when at(t) does not contain H.
  std::vector<std::optional<std::int64_t>> DeltaRelMinimaAt(
      std::size_t h) const;
  std::vector<std::size_t> MinimalExtensionsAt(std::size_t h) const;

 private:
  void RequireSelfsufficient(std::size_t h) const;
  ScaledDelta Scaled(std::int64_t v) const { return {v, structure_.k()}; }

  BilinearStructure structure_;
  std::shared_ptr<const Ambient> ambient_;
  std::vector<std::size_t> relations_dim_;
  std::vector<std::int64_t> delta_;
  std::vector<std::int64_t> min_super_delta_;
  std::vector<bool> selfsufficient_;
  std::vector<std::size_t> css_;
  std::vector<bool> css_unique_;
};

// CheckFewRelations over a prebuilt ambient; same verdict and witness.
FewRelationsVerdict CheckFewRelations(const BilinearStructure& s,
                                      const Ambient& ambient);

// Deterministic plain-text block.
std::string RenderText(const ClosureReport& report);
// Line-oriented key-value form, first line "format 1".
std::string RenderMachine(const ClosureReport& report);

}  // namespace predim

#endif  // PREDIM_CLOSURE_H_
