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

#include "predim/exterior.h"

#include <string>

#include "predim/errors.h"
#include "predim/literals.h"

namespace predim {
namespace {

std::uint32_t Negate(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

}  // namespace

std::size_t WedgeIndex(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw InvalidArgument("wedge index needs i < j < n");
  // Pairs (a, b) with a < i come first: (n-1) + (n-2) + ... + (n-i).
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> WedgeBasis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(WedgeDim(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

Bivector::Bivector(std::size_t n, FpVector coords)
    : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != WedgeDim(n)) {
    throw DimensionMismatch("bivector has " + std::to_string(coords_.size()) +
                            " coordinates, expected " +
                            std::to_string(WedgeDim(n)));
  }
}

Bivector Bivector::Zero(std::uint32_t p, std::size_t n) {
  return Bivector(n, FpVector::Zero(p, WedgeDim(n)));
}

Bivector Bivector::Basic(std::uint32_t p, std::size_t n, std::size_t i,
                         std::size_t j) {
  return Bivector(n, FpVector::Unit(p, WedgeDim(n), WedgeIndex(n, i, j)));
}

std::uint32_t Bivector::MatrixEntry(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i < j) return coords_[WedgeIndex(n_, i, j)];
  return Negate(coords_[WedgeIndex(n_, j, i)], p());
}

Bivector& Bivector::operator+=(const Bivector& other) {
  if (n_ != other.n_) throw DimensionMismatch("bivector ambient mismatch");
  coords_ += other.coords_;
  return *this;
}

Bivector& Bivector::operator-=(const Bivector& other) {
  if (n_ != other.n_) throw DimensionMismatch("bivector ambient mismatch");
  coords_ -= other.coords_;
  return *this;
}

Bivector Wedge(const FpVector& u, const FpVector& v) {
  if (u.p() != v.p() || u.size() != v.size()) {
    throw DimensionMismatch("wedge of vectors from different ambients");
  }
  const std::uint32_t p = u.p();
  const std::size_t n = u.size();
  std::vector<std::uint32_t> coords;
  coords.reserve(WedgeDim(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t a = static_cast<std::uint64_t>(u[i]) * v[j] % p;
      const std::uint64_t b = static_cast<std::uint64_t>(u[j]) * v[i] % p;
      coords.push_back(static_cast<std::uint32_t>((a + p - b) % p));
    }
  }
  return Bivector(n, FpVector(p, std::move(coords)));
}

Subspace Lambda2Embed(const Subspace& h) {
  const std::size_t n = h.ambient_dim();
  const std::vector<FpVector> basis = h.Basis();
  std::vector<FpVector> wedges;
  wedges.reserve(WedgeDim(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      wedges.push_back(Wedge(basis[i], basis[j]).coords());
    }
  }
  return Subspace::Span(wedges, h.p(), WedgeDim(n));
}

Bivector BuildW(std::size_t m, std::span<const FpVector> vectors) {
  if (m == 0) throw InvalidArgument("m must be positive");
  if (vectors.size() != 2 * m) {
    throw InvalidArgument("BuildW(" + std::to_string(m) + ") needs " +
                          std::to_string(2 * m) + " vectors, got " +
                          std::to_string(vectors.size()));
  }
  const std::uint32_t p = vectors[0].p();
  const std::size_t n = vectors[0].size();
  if (Subspace::Span(vectors, p, n).dim() != 2 * m) {
    throw InvalidArgument("BuildW needs linearly independent vectors");
  }
  Bivector w = Bivector::Zero(p, n);
  for (std::size_t i = 0; i < m; ++i) {
    w += Wedge(vectors[2 * i], vectors[2 * i + 1]);
  }
  return w;
}

std::vector<FpVector> AlternatingMatrix(const Bivector& w) {
  std::vector<FpVector> rows;
  rows.reserve(w.n());
  for (std::size_t i = 0; i < w.n(); ++i) {
    std::vector<std::uint32_t> row(w.n());
    for (std::size_t j = 0; j < w.n(); ++j) row[j] = w.MatrixEntry(i, j);
    rows.emplace_back(w.p(), std::move(row));
  }
  return rows;
}

std::size_t BivectorRank(const Bivector& w) { return SupportSpace(w).dim(); }

Subspace SupportSpace(const Bivector& w) {
  return Subspace::Span(AlternatingMatrix(w), w.p(), w.n());
}

Bivector ApplyLinearMap(const Bivector& w, std::span<const FpVector> images) {
  if (images.size() != w.n()) {
    throw DimensionMismatch("linear map needs one image per basis vector");
  }
  Bivector out = Bivector::Zero(w.p(), images.empty() ? w.n()
                                                      : images[0].size());
  for (const auto& [i, j] : WedgeBasis(w.n())) {
    const std::uint32_t c = w.coords()[WedgeIndex(w.n(), i, j)];
    if (c != 0) out += c * Wedge(images[i], images[j]);
  }
  return out;
}

// Lambda^2 is monotone in E, so the dimensions of supporting subspaces form
// an up-set. Scanning downward from the hyperplanes and stopping at the first
// dimension with no supporting subspace therefore covers every E.
std::size_t MinSupportDimOracle(const Bivector& w, std::uint64_t guardrail) {
  const std::size_t n = w.n();
  std::size_t least = n;
  for (std::size_t d = n; d-- > 0;) {
    const std::uint64_t required = CountSubspacesOfDim(n, d, w.p());
    if (required > guardrail) throw GuardrailExceeded(required, guardrail);
    const bool none = ForEachSubspaceOfDim(n, d, w.p(), [&](const Subspace& e) {
      return !Lambda2Embed(e).Contains(w.coords());
    });
    if (none) break;
    least = d;
  }
  return least;
}

Bivector ParseBivector(std::string_view text, std::uint32_t p,
                       std::size_t n) {
  return Bivector(n, ParseVector(text, p, WedgeDim(n)));
}

}  // namespace predim
