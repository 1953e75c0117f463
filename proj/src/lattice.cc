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

#include "predim/lattice.h"

#include <utility>

#include "predim/errors.h"

namespace predim {
namespace {

// Lattices up to this size get dense join/meet tables (two tables of
// size^2 32-bit entries).
constexpr std::size_t kDenseTableLimit = 1024;

}  // namespace

SubspaceLattice::SubspaceLattice(std::size_t n, std::uint32_t p,
                                 std::uint64_t guardrail)
    : n_(n), p_(p), subspaces_(EnumerateSubspaces(n, p, guardrail)) {
  const std::size_t size = subspaces_.size();
  index_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) index_.emplace(subspaces_[i], i);

  const std::size_t words = (size + 63) / 64;
  contains_bits_.assign(size * words, 0);
  supers_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (const Subspace& s : EnumerateSuperspaces(subspaces_[i], guardrail)) {
      const std::size_t j = index_.at(s);
      supers_[i].push_back(j);
      contains_bits_[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    // Canonical order of the superspaces matches index order already.
  }

  if (size <= kDenseTableLimit) {
    join_.assign(size * size, 0);
    meet_.assign(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i; j < size; ++j) {
        const auto join = static_cast<std::uint32_t>(
            index_.at(Sum(subspaces_[i], subspaces_[j])));
        const auto meet = static_cast<std::uint32_t>(
            index_.at(Intersect(subspaces_[i], subspaces_[j])));
        join_[i * size + j] = join_[j * size + i] = join;
        meet_[i * size + j] = meet_[j * size + i] = meet;
      }
    }
  }

  vectors_ = EnumerateVectors(n, p, guardrail);
  line_of_.reserve(vectors_.size());
  for (const FpVector& v : vectors_) {
    line_of_.push_back(index_.at(Subspace::Span({&v, 1}, p, n)));
  }
}

std::optional<std::size_t> SubspaceLattice::Find(const Subspace& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubspaceLattice::IndexOf(const Subspace& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) {
    throw DimensionMismatch("subspace does not belong to this lattice");
  }
  return it->second;
}

bool SubspaceLattice::Contains(std::size_t outer, std::size_t inner) const {
  const std::size_t words = (subspaces_.size() + 63) / 64;
  return (contains_bits_[outer * words + inner / 64] >> (inner % 64)) & 1;
}

std::size_t SubspaceLattice::Join(std::size_t i, std::size_t j) const {
  if (!join_.empty()) return join_[i * subspaces_.size() + j];
  return index_.at(Sum(subspaces_[i], subspaces_[j]));
}

std::size_t SubspaceLattice::Meet(std::size_t i, std::size_t j) const {
  if (!meet_.empty()) return meet_[i * subspaces_.size() + j];
  return index_.at(Intersect(subspaces_[i], subspaces_[j]));
}

std::size_t SubspaceLattice::Code(const FpVector& v) const {
  if (v.p() != p_ || v.size() != n_) {
    throw DimensionMismatch("vector does not live in this lattice");
  }
  std::size_t code = 0;
  for (std::uint32_t c : v.coords()) code = code * p_ + c;
  return code;
}

}  // namespace predim
