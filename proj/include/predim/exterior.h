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

#ifndef PREDIM_EXTERIOR_H_
#define PREDIM_EXTERIOR_H_

// The exterior square of F_p^n.
//
// Bivectors are coordinate vectors over the basic commutators e_i ^ e_j,
// i < j, listed in lexicographic order of (i, j). For n = 4 the order is
// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3). File formats depend on this order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "predim/fp_linalg.h"

namespace predim {

constexpr std::size_t WedgeDim(std::size_t n) { return n * (n - (n > 0)) / 2; }

// Position of e_i ^ e_j (i < j < n) in the wedge basis.
std::size_t WedgeIndex(std::size_t n, std::size_t i, std::size_t j);
std::vector<std::pair<std::size_t, std::size_t>> WedgeBasis(std::size_t n);

class Bivector {
 public:
  // coords must have length WedgeDim(n).
  Bivector(std::size_t n, FpVector coords);

  static Bivector Zero(std::uint32_t p, std::size_t n);
  // The basic commutator e_i ^ e_j, i < j.
  static Bivector Basic(std::uint32_t p, std::size_t n, std::size_t i,
                        std::size_t j);

  std::uint32_t p() const { return coords_.p(); }
  std::size_t n() const { return n_; }
  const FpVector& coords() const { return coords_; }
  bool IsZero() const { return coords_.IsZero(); }

  // Entry (i, j) of the alternating matrix, for any i, j < n.
  std::uint32_t MatrixEntry(std::size_t i, std::size_t j) const;

  Bivector& operator+=(const Bivector& other);
  Bivector& operator-=(const Bivector& other);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator*(std::uint32_t s, Bivector w) {
    w.coords_ *= s;
    return w;
  }

  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  std::size_t n_;
  FpVector coords_;
};

// u ^ v; the (i, j) coordinate is u_i v_j - u_j v_i.
Bivector Wedge(const FpVector& u, const FpVector& v);

// Lambda^2 H as a subspace of the wedge ambient F_p^{WedgeDim(n)}.
Subspace Lambda2Embed(const Subspace& h);

// sum_{i<m} a_{2i} ^ a_{2i+1}; the 2m vectors must be linearly independent.
Bivector BuildW(std::size_t m, std::span<const FpVector> vectors);

// Rows of the n x n alternating matrix of w.
std::vector<FpVector> AlternatingMatrix(const Bivector& w);

// Rank of the alternating matrix; always even.
std::size_t BivectorRank(const Bivector& w);

// Row space of the alternating matrix: the smallest E with w in Lambda^2 E.
Subspace SupportSpace(const Bivector& w);

// Induced action on Lambda^2: maps e_i ^ e_j to T(e_i) ^ T(e_j), where
// images[i] = T(e_i).
Bivector ApplyLinearMap(const Bivector& w, std::span<const FpVector> images);

// Brute force: the least dim E over all subspaces E of F_p^n with
// w in Lambda^2 E, scanning dimensions downward from n - 1. Throws
// GuardrailExceeded if a scanned dimension has more subspaces than allowed.
std::size_t MinSupportDimOracle(const Bivector& w,
                                std::uint64_t guardrail = kDefaultGuardrail);

// Comma-separated residues in wedge-basis order.
Bivector ParseBivector(std::string_view text, std::uint32_t p, std::size_t n);

}  // namespace predim

#endif  // PREDIM_EXTERIOR_H_
