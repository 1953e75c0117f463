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

#ifndef PREDIM_LATTICE_H_
#define PREDIM_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "predim/fp_linalg.h"

namespace predim {

// The full subspace lattice of F_p^n with precomputed index tables.
//
// Subspaces are numbered in canonical enumeration order, so index 0 is the
// zero subspace and the last index is the whole space. The object is
// immutable after construction and safe to share between threads.
class SubspaceLattice {
 public:
  SubspaceLattice(std::size_t n, std::uint32_t p,
                  std::uint64_t guardrail = kDefaultGuardrail);

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::size_t size() const { return subspaces_.size(); }
  const Subspace& at(std::size_t i) const { return subspaces_[i]; }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  std::size_t zero_index() const { return 0; }
  std::size_t full_index() const { return subspaces_.size() - 1; }

  std::optional<std::size_t> Find(const Subspace& s) const;
  // Like Find, but throws DimensionMismatch for foreign subspaces.
  std::size_t IndexOf(const Subspace& s) const;

  // Indices j with at(i) <= at(j), ascending (so i comes first).
  std::span<const std::size_t> Superspaces(std::size_t i) const {
    return supers_[i];
  }
  // True when at(inner) is contained in at(outer).
  bool Contains(std::size_t outer, std::size_t inner) const;

  std::size_t Join(std::size_t i, std::size_t j) const;
  std::size_t Meet(std::size_t i, std::size_t j) const;

  // Vectors of F_p^n in lexicographic order; Code() is the position of a
  // vector in that order.
  const std::vector<FpVector>& vectors() const { return vectors_; }
  std::size_t Code(const FpVector& v) const;
  // Index of the span of vectors()[code].
  std::size_t LineOf(std::size_t code) const { return line_of_[code]; }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Subspace> subspaces_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
  std::vector<std::vector<std::size_t>> supers_;
  std::vector<std::uint64_t> contains_bits_;
  // Dense join/meet tables, present only for small lattices.
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<FpVector> vectors_;
  std::vector<std::size_t> line_of_;
};

}  // namespace predim

#endif  // PREDIM_LATTICE_H_
