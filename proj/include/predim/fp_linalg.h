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

#ifndef PREDIM_FP_LINALG_H_
#define PREDIM_FP_LINALG_H_

// Exact linear algebra over a prime field F_p.
//
// Vectors are dense residue arrays. Subspaces are stored by their reduced
// row-echelon basis, which makes equality structural: two Subspace values
// compare equal exactly when they span the same space.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace predim {

// Default cap on the number of items any exhaustive enumeration may produce.
inline constexpr std::uint64_t kDefaultGuardrail = 1'000'000;

// Largest accepted modulus; keeps every product of two residues in 64 bits.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

bool IsPrime(std::uint64_t n);

// Throws InvalidArgument unless p is a prime no larger than kMaxPrime.
void CheckPrime(std::uint32_t p);

std::uint32_t InverseMod(std::uint32_t a, std::uint32_t p);

class FpVector {
 public:
  // The zero vector of F_2^0.
  FpVector() = default;
  FpVector(std::uint32_t p, std::vector<std::uint32_t> coords);

  static FpVector Zero(std::uint32_t p, std::size_t n);
  static FpVector Unit(std::uint32_t p, std::size_t n, std::size_t i);

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::uint32_t> coords() const { return coords_; }
  bool IsZero() const;

  FpVector& operator+=(const FpVector& other);
  FpVector& operator-=(const FpVector& other);
  FpVector& operator*=(std::uint32_t scalar);

  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }
  friend FpVector operator*(std::uint32_t s, FpVector v) { return v *= s; }
  FpVector operator-() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend auto operator<=>(const FpVector&, const FpVector&) = default;

 private:
  void CheckCompatible(const FpVector& other) const;

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> coords_;
};

class Subspace {
 public:
  // The zero subspace of F_p^ambient_dim.
  Subspace(std::uint32_t p, std::size_t ambient_dim);

  static Subspace Zero(std::uint32_t p, std::size_t ambient_dim);
  static Subspace Full(std::uint32_t p, std::size_t ambient_dim);
  static Subspace Span(std::span<const FpVector> vectors, std::uint32_t p,
                       std::size_t ambient_dim);

  // Adopts rows that are already in reduced row-echelon form; throws
  // InvalidArgument when they are not.
  static Subspace FromRref(std::uint32_t p, std::size_t ambient_dim,
                           std::vector<std::uint32_t> rows);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return std::span<const std::uint32_t>(rows_).subspan(i * ambient_dim_,
                                                         ambient_dim_);
  }
  FpVector BasisVector(std::size_t i) const;
  std::vector<FpVector> Basis() const;

  // Canonical representative of v + H: v with every pivot coordinate cleared.
  FpVector Reduce(const FpVector& v) const;
  bool Contains(const FpVector& v) const;
  bool Contains(const Subspace& other) const;

  std::size_t Hash() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  // Canonical order: prime, ambient dimension, dimension, then the basis
  // matrix read row by row.
  friend std::strong_ordering operator<=>(const Subspace& a,
                                          const Subspace& b);

 private:
  Subspace(std::uint32_t p, std::size_t ambient_dim,
           std::vector<std::uint32_t> rows, std::vector<std::size_t> pivots);

  std::uint32_t p_;
  std::size_t ambient_dim_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.Hash(); }
};

Subspace Sum(const Subspace& h, const Subspace& k);
Subspace Intersect(const Subspace& h, const Subspace& k);

// Number of d-dimensional subspaces of F_p^n (Gaussian binomial), saturating
// at UINT64_MAX.
std::uint64_t CountSubspacesOfDim(std::size_t n, std::size_t d,
                                  std::uint32_t p);
std::uint64_t CountSubspaces(std::size_t n, std::uint32_t p);
// p^n, saturating.
std::uint64_t CountVectors(std::size_t n, std::uint32_t p);

// All vectors of F_p^n in lexicographic order.
std::vector<FpVector> EnumerateVectors(std::size_t n, std::uint32_t p,
                                       std::uint64_t guardrail =
                                           kDefaultGuardrail);

// All subspaces of F_p^n, dimension-major, then lexicographic in the
// canonical basis.
std::vector<Subspace> EnumerateSubspaces(std::size_t n, std::uint32_t p,
                                         std::uint64_t guardrail =
                                             kDefaultGuardrail);

// All K with h <= K <= F_p^n, in the same canonical order.
std::vector<Subspace> EnumerateSuperspaces(const Subspace& h,
                                           std::uint64_t guardrail =
                                               kDefaultGuardrail);

// Visits every d-dimensional subspace of F_p^n without materializing the
// whole layer, until visit returns false. Visiting order is deterministic but
// not canonical. Returns false when stopped early.
bool ForEachSubspaceOfDim(std::size_t n, std::size_t d, std::uint32_t p,
                          const std::function<bool(const Subspace&)>& visit);

namespace internal {

// Brings the row-major rows x cols matrix into reduced row-echelon form in
// place, drops zero rows, and returns the pivot columns.
std::vector<std::size_t> ReduceRows(std::vector<std::uint32_t>& m,
                                    std::size_t cols, std::uint32_t p);

}  // namespace internal

}  // namespace predim

#endif  // PREDIM_FP_LINALG_H_
