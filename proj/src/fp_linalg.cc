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

#include "predim/fp_linalg.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "predim/errors.h"

namespace predim {
namespace {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a + b;
}

std::uint32_t MulMod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t SubMod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

void CheckGuardrail(std::uint64_t required, std::uint64_t guardrail) {
  if (required > guardrail) throw GuardrailExceeded(required, guardrail);
}

void CheckSameAmbient(const Subspace& h, const Subspace& k) {
  if (h.p() != k.p() || h.ambient_dim() != k.ambient_dim()) {
    throw DimensionMismatch("subspaces live in different ambients");
  }
}

// Calls visit(rows) for every RREF matrix with the given pivot columns until
// it returns false.
bool ForEachRrefWithPivots(std::size_t n, std::uint32_t p,
                           const std::vector<std::size_t>& pivots,
                           const std::function<bool(
                               const std::vector<std::uint32_t>&)>& visit) {
  const std::size_t d = pivots.size();
  std::vector<std::uint32_t> rows(d * n, 0);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_slots;
  for (std::size_t r = 0; r < d; ++r) {
    rows[r * n + pivots[r]] = 1;
    for (std::size_t c = pivots[r] + 1; c < n; ++c) {
      if (!is_pivot[c]) free_slots.push_back(r * n + c);
    }
  }
  while (true) {
    if (!visit(rows)) return false;
    // Odometer over the free entries.
    std::size_t i = free_slots.size();
    while (i > 0) {
      std::uint32_t& cell = rows[free_slots[i - 1]];
      if (++cell < p) break;
      cell = 0;
      --i;
    }
    if (i == 0) return true;
  }
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

void CheckPrime(std::uint32_t p) {
  thread_local std::uint32_t last_checked = 2;
  if (p == last_checked) return;
  if (p > kMaxPrime || !IsPrime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) +
                          " is not a supported prime");
  }
  last_checked = p;
}

std::uint32_t InverseMod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw InvalidArgument("zero has no inverse");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// ---------------------------------------------------------------------------
// FpVector

FpVector::FpVector(std::uint32_t p, std::vector<std::uint32_t> coords)
    : p_(p), coords_(std::move(coords)) {
  CheckPrime(p);
  for (std::uint32_t c : coords_) {
    if (c >= p) {
      throw InvalidArgument("residue " + std::to_string(c) +
                            " out of range for p = " + std::to_string(p));
    }
  }
}

FpVector FpVector::Zero(std::uint32_t p, std::size_t n) {
  return FpVector(p, std::vector<std::uint32_t>(n, 0));
}

FpVector FpVector::Unit(std::uint32_t p, std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidArgument("unit vector index out of range");
  std::vector<std::uint32_t> coords(n, 0);
  coords[i] = 1;
  return FpVector(p, std::move(coords));
}

bool FpVector::IsZero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::uint32_t c) { return c == 0; });
}

void FpVector::CheckCompatible(const FpVector& other) const {
  if (p_ != other.p_ || coords_.size() != other.coords_.size()) {
    throw DimensionMismatch("vectors have different modulus or length");
  }
}

FpVector& FpVector::operator+=(const FpVector& other) {
  CheckCompatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const std::uint32_t s = coords_[i] + other.coords_[i];
    coords_[i] = s >= p_ ? s - p_ : s;
  }
  return *this;
}

FpVector& FpVector::operator-=(const FpVector& other) {
  CheckCompatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = SubMod(coords_[i], other.coords_[i], p_);
  }
  return *this;
}

FpVector& FpVector::operator*=(std::uint32_t scalar) {
  scalar %= p_;
  for (std::uint32_t& c : coords_) c = MulMod(c, scalar, p_);
  return *this;
}

FpVector FpVector::operator-() const {
  FpVector out = *this;
  for (std::uint32_t& c : out.coords_) c = c == 0 ? 0 : p_ - c;
  return out;
}

// ---------------------------------------------------------------------------
// Row reduction

namespace internal {

std::vector<std::size_t> ReduceRows(std::vector<std::uint32_t>& m,
                                    std::size_t cols, std::uint32_t p) {
  const std::size_t rows = cols == 0 ? 0 : m.size() / cols;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != rank) {
      std::swap_ranges(m.begin() + sel * cols, m.begin() + (sel + 1) * cols,
                       m.begin() + rank * cols);
    }
    std::uint32_t* pivot_row = m.data() + rank * cols;
    if (pivot_row[c] != 1) {
      const std::uint32_t inv = InverseMod(pivot_row[c], p);
      for (std::size_t j = c; j < cols; ++j) {
        pivot_row[j] = MulMod(pivot_row[j], inv, p);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::uint32_t* row = m.data() + r * cols;
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (pivot_row[j] != 0) {
          row[j] = SubMod(row[j], MulMod(f, pivot_row[j], p), p);
        }
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank * cols);
  return pivots;
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::uint32_t p, std::size_t ambient_dim)
    : p_(p), ambient_dim_(ambient_dim) {
  CheckPrime(p);
}

Subspace::Subspace(std::uint32_t p, std::size_t ambient_dim,
                   std::vector<std::uint32_t> rows,
                   std::vector<std::size_t> pivots)
    : p_(p),
      ambient_dim_(ambient_dim),
      rows_(std::move(rows)),
      pivots_(std::move(pivots)) {}

Subspace Subspace::Zero(std::uint32_t p, std::size_t ambient_dim) {
  return Subspace(p, ambient_dim);
}

Subspace Subspace::Full(std::uint32_t p, std::size_t ambient_dim) {
  CheckPrime(p);
  std::vector<std::uint32_t> rows(ambient_dim * ambient_dim, 0);
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    rows[i * ambient_dim + i] = 1;
    pivots[i] = i;
  }
  return Subspace(p, ambient_dim, std::move(rows), std::move(pivots));
}

Subspace Subspace::Span(std::span<const FpVector> vectors, std::uint32_t p,
                        std::size_t ambient_dim) {
  CheckPrime(p);
  std::vector<std::uint32_t> m;
  m.reserve(vectors.size() * ambient_dim);
  for (const FpVector& v : vectors) {
    if (v.p() != p || v.size() != ambient_dim) {
      throw DimensionMismatch("generator does not live in F_" +
                              std::to_string(p) + "^" +
                              std::to_string(ambient_dim));
    }
    m.insert(m.end(), v.coords().begin(), v.coords().end());
  }
  std::vector<std::size_t> pivots = internal::ReduceRows(m, ambient_dim, p);
  return Subspace(p, ambient_dim, std::move(m), std::move(pivots));
}

Subspace Subspace::FromRref(std::uint32_t p, std::size_t ambient_dim,
                            std::vector<std::uint32_t> rows) {
  CheckPrime(p);
  if (ambient_dim == 0 ? !rows.empty() : rows.size() % ambient_dim != 0) {
    throw InvalidArgument("row data does not match the ambient dimension");
  }
  const std::size_t d = ambient_dim == 0 ? 0 : rows.size() / ambient_dim;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t c = 0;
    while (c < ambient_dim && rows[r * ambient_dim + c] == 0) ++c;
    if (c == ambient_dim || rows[r * ambient_dim + c] != 1 ||
        (!pivots.empty() && c <= pivots.back())) {
      throw InvalidArgument("rows are not in reduced row-echelon form");
    }
    pivots.push_back(c);
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (rows[r * ambient_dim + j] >= p) {
        throw InvalidArgument("residue out of range");
      }
    }
    for (std::size_t s = 0; s < d; ++s) {
      if (s != r && rows[s * ambient_dim + pivots[r]] != 0) {
        throw InvalidArgument("pivot column is not cleared");
      }
    }
  }
  return Subspace(p, ambient_dim, std::move(rows), std::move(pivots));
}

FpVector Subspace::BasisVector(std::size_t i) const {
  const auto r = row(i);
  return FpVector(p_, std::vector<std::uint32_t>(r.begin(), r.end()));
}

std::vector<FpVector> Subspace::Basis() const {
  std::vector<FpVector> basis;
  basis.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) basis.push_back(BasisVector(i));
  return basis;
}

FpVector Subspace::Reduce(const FpVector& v) const {
  if (v.p() != p_ || v.size() != ambient_dim_) {
    throw DimensionMismatch("vector does not live in the subspace's ambient");
  }
  std::vector<std::uint32_t> out(v.coords().begin(), v.coords().end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const std::uint32_t f = out[pivots_[r]];
    if (f == 0) continue;
    const auto basis_row = row(r);
    for (std::size_t j = pivots_[r]; j < ambient_dim_; ++j) {
      if (basis_row[j] != 0) {
        out[j] = SubMod(out[j], MulMod(f, basis_row[j], p_), p_);
      }
    }
  }
  return FpVector(p_, std::move(out));
}

bool Subspace::Contains(const FpVector& v) const { return Reduce(v).IsZero(); }

bool Subspace::Contains(const Subspace& other) const {
  CheckSameAmbient(*this, other);
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!Contains(other.BasisVector(i))) return false;
  }
  return true;
}

std::size_t Subspace::Hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(
      (static_cast<std::uint64_t>(p_) << 32) ^ ambient_dim_);
  for (std::uint32_t x : rows_) {
    h ^= std::hash<std::uint32_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end());
}

Subspace Sum(const Subspace& h, const Subspace& k) {
  CheckSameAmbient(h, k);
  std::vector<FpVector> gens = h.Basis();
  for (std::size_t i = 0; i < k.dim(); ++i) gens.push_back(k.BasisVector(i));
  return Subspace::Span(gens, h.p(), h.ambient_dim());
}

// Zassenhaus: reduce [h | h ; k | 0]; rows with a vanishing left half carry
// a basis of the intersection in their right half.
Subspace Intersect(const Subspace& h, const Subspace& k) {
  CheckSameAmbient(h, k);
  const std::size_t n = h.ambient_dim();
  const std::uint32_t p = h.p();
  if (h.dim() == 0 || k.dim() == 0) return Subspace::Zero(p, n);
  std::vector<std::uint32_t> m;
  m.reserve((h.dim() + k.dim()) * 2 * n);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const auto r = h.row(i);
    m.insert(m.end(), r.begin(), r.end());
    m.insert(m.end(), r.begin(), r.end());
  }
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const auto r = k.row(i);
    m.insert(m.end(), r.begin(), r.end());
    m.insert(m.end(), n, 0);
  }
  const std::vector<std::size_t> pivots = internal::ReduceRows(m, 2 * n, p);
  std::vector<FpVector> gens;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    gens.emplace_back(p, std::vector<std::uint32_t>(
                             m.begin() + r * 2 * n + n,
                             m.begin() + (r + 1) * 2 * n));
  }
  return Subspace::Span(gens, p, n);
}

// ---------------------------------------------------------------------------
// Counting and enumeration

std::uint64_t CountSubspacesOfDim(std::size_t n, std::size_t d,
                                  std::uint32_t p) {
  if (d > n) return 0;
  // Pascal-type recurrence [n, d] = [n-1, d-1] + p^d [n-1, d].
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, d); j >= 1; --j) {
      row[j] = SaturatingAdd(row[j - 1], SaturatingMul(CountVectors(j, p),
                                                       row[j]));
    }
  }
  return row[d];
}

std::uint64_t CountSubspaces(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 0;
  for (std::size_t d = 0; d <= n; ++d) {
    total = SaturatingAdd(total, CountSubspacesOfDim(n, d, p));
  }
  return total;
}

std::uint64_t CountVectors(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total = SaturatingMul(total, p);
  return total;
}

std::vector<FpVector> EnumerateVectors(std::size_t n, std::uint32_t p,
                                       std::uint64_t guardrail) {
  CheckPrime(p);
  CheckGuardrail(CountVectors(n, p), guardrail);
  std::vector<FpVector> out;
  std::vector<std::uint32_t> coords(n, 0);
  while (true) {
    out.emplace_back(p, coords);
    std::size_t i = n;
    while (i > 0) {
      if (++coords[i - 1] < p) break;
      coords[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
  }
}

bool ForEachSubspaceOfDim(std::size_t n, std::size_t d, std::uint32_t p,
                          const std::function<bool(const Subspace&)>& visit) {
  CheckPrime(p);
  if (d > n) return true;
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    const bool more = ForEachRrefWithPivots(
        n, p, pivots, [&](const std::vector<std::uint32_t>& rows) {
          return visit(Subspace::FromRref(p, n, rows));
        });
    if (!more) return false;
    // Next pivot combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && pivots[i - 1] == n - d + i - 1) --i;
    if (i == 0) return true;
    ++pivots[i - 1];
    for (std::size_t j = i; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<Subspace> EnumerateSubspaces(std::size_t n, std::uint32_t p,
                                         std::uint64_t guardrail) {
  CheckPrime(p);
  CheckGuardrail(CountSubspaces(n, p), guardrail);
  std::vector<Subspace> out;
  for (std::size_t d = 0; d <= n; ++d) {
    const std::size_t layer_start = out.size();
    ForEachSubspaceOfDim(n, d, p, [&](const Subspace& s) {
      out.push_back(s);
      return true;
    });
    std::sort(out.begin() + layer_start, out.end());
  }
  return out;
}

std::vector<Subspace> EnumerateSuperspaces(const Subspace& h,
                                           std::uint64_t guardrail) {
  const std::size_t n = h.ambient_dim();
  const std::uint32_t p = h.p();
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, r = 0; c < n; ++c) {
    if (r < h.dim() && h.pivots()[r] == c) {
      ++r;
    } else {
      free_cols.push_back(c);
    }
  }
  // Subspaces of the quotient M/H, read in the non-pivot coordinates, lift
  // bijectively to the superspaces of H.
  const std::vector<Subspace> quotient =
      EnumerateSubspaces(free_cols.size(), p, guardrail);
  const std::vector<FpVector> base = h.Basis();
  std::vector<Subspace> out;
  out.reserve(quotient.size());
  for (const Subspace& u : quotient) {
    std::vector<FpVector> gens = base;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      std::vector<std::uint32_t> lifted(n, 0);
      const auto r = u.row(i);
      for (std::size_t t = 0; t < free_cols.size(); ++t) {
        lifted[free_cols[t]] = r[t];
      }
      gens.emplace_back(p, std::move(lifted));
    }
    out.push_back(Subspace::Span(gens, p, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace predim
