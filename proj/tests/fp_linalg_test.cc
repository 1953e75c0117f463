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

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.h"
#include "predim/errors.h"

namespace predim {
namespace {

FpVector V(std::uint32_t p, std::vector<std::uint32_t> c) {
  return FpVector(p, std::move(c));
}

Subspace SpanOf(std::uint32_t p, std::size_t n,
                const std::vector<FpVector>& gens) {
  return Subspace::Span(gens, p, n);
}

std::vector<FpVector> RandomVectors(std::mt19937_64& rng, std::uint32_t p,
                                    std::size_t n, std::size_t count) {
  std::vector<FpVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint32_t> c(n);
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
    out.emplace_back(p, std::move(c));
  }
  return out;
}

TEST(FpVectorTest, ArithmeticIsModular) {
  const FpVector a = V(5, {1, 4, 3});
  const FpVector b = V(5, {4, 4, 2});
  EXPECT_EQ(a + b, V(5, {0, 3, 0}));
  EXPECT_EQ(a - b, V(5, {2, 0, 1}));
  EXPECT_EQ(3u * a, V(5, {3, 2, 4}));
  EXPECT_EQ(-a, V(5, {4, 1, 2}));
  EXPECT_TRUE((a - a).IsZero());
}

TEST(FpVectorTest, RejectsBadInput) {
  EXPECT_THROW(V(4, {1}), InvalidArgument);
  EXPECT_THROW(V(3, {3}), InvalidArgument);
  EXPECT_THROW(V(3, {1}) + V(3, {1, 0}), DimensionMismatch);
  EXPECT_THROW(V(3, {1}) + V(5, {1}), DimensionMismatch);
}

TEST(FpLinalgTest, PrimalityAndInverses) {
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(2147483647));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      EXPECT_EQ(static_cast<std::uint64_t>(a) * InverseMod(a, p) % p, 1u);
    }
  }
}

TEST(SubspaceTest, SpanExamples) {
  EXPECT_EQ(SpanOf(2, 3, {}).dim(), 0u);
  EXPECT_EQ(SpanOf(2, 3, {}), Subspace::Zero(2, 3));
  const FpVector e0 = FpVector::Unit(2, 3, 0);
  EXPECT_EQ(SpanOf(2, 3, {e0, e0}).dim(), 1u);
  EXPECT_EQ(SpanOf(2, 3, {V(2, {1, 1, 0}), V(2, {0, 1, 1}), V(2, {1, 0, 1})})
                .dim(),
            2u);
}

TEST(SubspaceTest, SumExamples) {
  const Subspace e0 = SpanOf(2, 2, {FpVector::Unit(2, 2, 0)});
  const Subspace e1 = SpanOf(2, 2, {FpVector::Unit(2, 2, 1)});
  const Subspace diag = SpanOf(2, 2, {V(2, {1, 1})});
  EXPECT_EQ(Sum(e0, Subspace::Zero(2, 2)), e0);
  EXPECT_EQ(Sum(e0, e1), Subspace::Full(2, 2));
  EXPECT_EQ(Sum(diag, e1), Subspace::Full(2, 2));
}

TEST(SubspaceTest, IntersectExamples) {
  const Subspace a =
      SpanOf(2, 3, {FpVector::Unit(2, 3, 0), FpVector::Unit(2, 3, 1)});
  const Subspace b =
      SpanOf(2, 3, {FpVector::Unit(2, 3, 1), FpVector::Unit(2, 3, 2)});
  EXPECT_EQ(Intersect(a, a), a);
  EXPECT_EQ(Intersect(SpanOf(2, 3, {FpVector::Unit(2, 3, 0)}),
                      SpanOf(2, 3, {FpVector::Unit(2, 3, 1)})),
            Subspace::Zero(2, 3));
  EXPECT_EQ(Intersect(a, b), SpanOf(2, 3, {FpVector::Unit(2, 3, 1)}));
}

TEST(SubspaceTest, ContainsExamples) {
  const Subspace h = SpanOf(2, 3, {V(2, {1, 1, 0}), FpVector::Unit(2, 3, 2)});
  EXPECT_TRUE(h.Contains(FpVector::Zero(2, 3)));
  EXPECT_FALSE(SpanOf(2, 3, {FpVector::Unit(2, 3, 0)})
                   .Contains(FpVector::Unit(2, 3, 1)));
  EXPECT_TRUE(h.Contains(V(2, {1, 1, 1})));
}

TEST(SubspaceTest, CanonicalFormIsStructural) {
  const Subspace a = SpanOf(3, 3, {V(3, {1, 2, 0}), V(3, {0, 1, 1})});
  const Subspace b = SpanOf(3, 3, {V(3, {1, 0, 1}), V(3, {1, 1, 2})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.Hash(), b.Hash());
  EXPECT_EQ(Subspace::FromRref(3, 3, {1, 0, 1, 0, 1, 1}), a);
  EXPECT_THROW(Subspace::FromRref(3, 3, {1, 1, 0, 1, 0, 0}), InvalidArgument);
}

TEST(SubspaceTest, ReduceGivesCosetRepresentative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 5;
    const auto gens = RandomVectors(rng, p, 4, 2);
    const Subspace h = SpanOf(p, 4, gens);
    const FpVector v = RandomVectors(rng, p, 4, 1)[0];
    const FpVector r = h.Reduce(v);
    EXPECT_TRUE(h.Contains(v - r));
    for (std::size_t i = 0; i < h.dim(); ++i) {
      EXPECT_EQ(r[h.pivots()[i]], 0u);
    }
    EXPECT_EQ(h.Reduce(v + gens[0]), r);
  }
}

// Span, sum, intersection and containment agree with explicit vector sets.
TEST(SubspaceTest, AgreesWithVectorSetOracle) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 3 : 2;
    const std::size_t n = 2 + trial % 3;
    const auto ga = RandomVectors(rng, p, n, 1 + rng() % 3);
    const auto gb = RandomVectors(rng, p, n, 1 + rng() % 3);
    const Subspace a = SpanOf(p, n, ga);
    const Subspace b = SpanOf(p, n, gb);
    const oracle::VecSet sa = oracle::SpanSet(ga, p, n);
    const oracle::VecSet sb = oracle::SpanSet(gb, p, n);
    EXPECT_EQ(oracle::ToSet(a), sa);
    EXPECT_EQ(a.dim(), oracle::DimOf(sa, p));
    EXPECT_EQ(oracle::ToSet(Sum(a, b)), oracle::SumSets(sa, sb, p, n));
    EXPECT_EQ(oracle::ToSet(Intersect(a, b)), oracle::IntersectSets(sa, sb));
    const bool contains = std::includes(sa.begin(), sa.end(), sb.begin(),
                                        sb.end());
    EXPECT_EQ(a.Contains(b), contains);
  }
}

TEST(SubspaceTest, DimensionMismatchIsRejected) {
  EXPECT_THROW(Sum(Subspace::Zero(2, 3), Subspace::Zero(2, 4)),
               DimensionMismatch);
  EXPECT_THROW(Subspace::Zero(2, 3).Contains(FpVector::Zero(2, 4)),
               DimensionMismatch);
}

TEST(EnumerationTest, CountsMatchExamples) {
  EXPECT_EQ(EnumerateSubspaces(3, 2).size(), 16u);
  EXPECT_EQ(EnumerateSubspaces(4, 2).size(), 67u);
  EXPECT_EQ(CountSubspaces(3, 2), 16u);
  EXPECT_EQ(CountSubspaces(4, 2), 67u);
  EXPECT_EQ(CountSubspacesOfDim(3, 1, 2), 7u);
  EXPECT_EQ(CountVectors(4, 3), 81u);
}

TEST(EnumerationTest, MatchesBruteForceSubspaceSets) {
  for (auto [n, p] : {std::pair<std::size_t, std::uint32_t>{3, 2},
                      {4, 2},
                      {2, 3},
                      {3, 3},
                      {2, 5}}) {
    const auto expected = oracle::AllSubspaceSets(n, p);
    const auto subspaces = EnumerateSubspaces(n, p);
    std::set<oracle::VecSet> got;
    for (const Subspace& s : subspaces) got.insert(oracle::ToSet(s));
    EXPECT_EQ(got.size(), subspaces.size());
    EXPECT_EQ(got, expected) << "n=" << n << " p=" << p;
    EXPECT_EQ(CountSubspaces(n, p), expected.size());
    for (std::size_t i = 1; i < subspaces.size(); ++i) {
      EXPECT_LT(subspaces[i - 1], subspaces[i]);
      EXPECT_LE(subspaces[i - 1].dim(), subspaces[i].dim());
    }
  }
}

TEST(EnumerationTest, VectorsAreLexicographic) {
  const auto vs = EnumerateVectors(2, 3);
  ASSERT_EQ(vs.size(), 9u);
  EXPECT_EQ(vs.front(), FpVector::Zero(3, 2));
  EXPECT_EQ(vs[1], V(3, {0, 1}));
  EXPECT_EQ(vs.back(), V(3, {2, 2}));
}

TEST(EnumerationTest, SuperspacesMatchFilter) {
  const auto all = EnumerateSubspaces(4, 2);
  for (const Subspace& h : all) {
    std::vector<Subspace> expected;
    for (const Subspace& k : all) {
      if (k.Contains(h)) expected.push_back(k);
    }
    EXPECT_EQ(EnumerateSuperspaces(h), expected);
  }
  const Subspace full = Subspace::Full(3, 3);
  EXPECT_EQ(EnumerateSuperspaces(full), std::vector<Subspace>{full});
}

TEST(EnumerationTest, GuardrailReportsRequiredCount) {
  try {
    EnumerateSubspaces(4, 2, 10);
    FAIL() << "expected GuardrailExceeded";
  } catch (const GuardrailExceeded& e) {
    EXPECT_EQ(e.required(), 67u);
    EXPECT_EQ(e.limit(), 10u);
  }
}

TEST(EnumerationTest, ForEachStopsEarly) {
  int visited = 0;
  const bool finished = ForEachSubspaceOfDim(3, 1, 2, [&](const Subspace&) {
    return ++visited < 3;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(visited, 3);
}

}  // namespace
}  // namespace predim
