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

#include "predim/closure.h"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracle.h"
#include "predim/errors.h"
#include "predim/exterior.h"
#include "predim/free_case.h"
#include "predim/literals.h"

namespace predim {
namespace {

using oracle::VecSet;

BilinearStructure S1() {
  return BilinearStructure(2, 3, 1,
                           Lambda2Embed(ParseSubspace("1,0,0;0,1,0", 2, 3)));
}

BilinearStructure S2() {
  return BilinearStructure(2, 3, 1, Subspace::Full(2, 3));
}

Subspace Sub(const char* text) { return ParseSubspace(text, 2, 3); }

std::vector<FpVector> Vecs(const char* text) {
  return ParseVectorList(text, 2, 3);
}

// Literal definitions evaluated on vector sets.
class Oracle {
 public:
  explicit Oracle(const BilinearStructure& s)
      : p_(s.p()), n_(s.n()), k_(s.k()) {
    const VecSet rel = oracle::ToSet(s.relations());
    for (const VecSet& h : oracle::AllSubspaceSets(n_, p_)) {
      const VecSet nh =
          oracle::IntersectSets(rel, oracle::Lambda2Set(h, p_, n_));
      delta_[h] = static_cast<std::int64_t>(k_ * oracle::DimOf(h, p_)) -
                  static_cast<std::int64_t>(oracle::DimOf(nh, p_));
    }
  }

  std::int64_t Delta(const VecSet& h) const { return delta_.at(h); }

  bool Selfsufficient(const VecSet& h) const {
    for (const auto& [k, d] : delta_) {
      if (Includes(k, h) && d < delta_.at(h)) return false;
    }
    return true;
  }

  VecSet Css(const VecSet& h) const {
    VecSet out;
    bool first = true;
    for (const auto& [k, d] : delta_) {
      if (!Includes(k, h) || !Selfsufficient(k)) continue;
      out = first ? k : oracle::IntersectSets(out, k);
      first = false;
    }
    return out;
  }

  std::int64_t Dk(const VecSet& h) const { return Delta(Css(h)); }

  std::set<oracle::Coords> Closure(const VecSet& b) const {
    std::set<oracle::Coords> out;
    const std::int64_t base = Dk(b);
    for (const oracle::Coords& v : AllVectors()) {
      std::vector<oracle::Coords> gens(b.begin(), b.end());
      gens.push_back(v);
      if (Dk(oracle::SpanSet(gens, p_, n_)) == base) out.insert(v);
    }
    return out;
  }

  std::optional<std::int64_t> DeltaRel(const VecSet& k,
                                        const VecSet& h) const {
    const VecSet target = oracle::SumSets(k, h, p_, n_);
    std::optional<std::int64_t> best;
    for (const auto& [k1, d] : delta_) {
      if (oracle::SumSets(k1, h, p_, n_) != target) continue;
      const VecSet meet = oracle::IntersectSets(k1, h);
      if (!Selfsufficient(meet)) continue;
      const std::int64_t value = d - Delta(meet);
      if (!best || value < *best) best = value;
    }
    return best;
  }

  std::set<VecSet> MinimalExtensions(const VecSet& h) const {
    std::set<VecSet> out;
    for (const auto& [k, d] : delta_) {
      if (k == h || !Includes(k, h) || !Selfsufficient(k)) continue;
      if (DeltaRel(k, h) != 0) continue;
      bool minimal = true;
      for (const auto& [l, dl] : delta_) {
        if (l == h || l == k || !Includes(l, h) || !Includes(k, l)) continue;
        if (DeltaRel(l, h) <= 0) minimal = false;
      }
      if (minimal) out.insert(k);
    }
    return out;
  }

  const std::map<VecSet, std::int64_t>& all() const { return delta_; }

 private:
  static bool Includes(const VecSet& outer, const VecSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(),
                         inner.end());
  }

  std::vector<oracle::Coords> AllVectors() const {
    std::vector<oracle::Coords> basis;
    for (std::size_t i = 0; i < n_; ++i) {
      oracle::Coords e(n_, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    const VecSet all = oracle::SpanSet(basis, p_, n_);
    return std::vector<oracle::Coords>(all.begin(), all.end());
  }

  std::uint32_t p_;
  std::size_t n_;
  std::uint32_t k_;
  std::map<VecSet, std::int64_t> delta_;
};

Subspace FromSet(const VecSet& set, std::uint32_t p, std::size_t n) {
  std::vector<FpVector> gens;
  for (const auto& c : set) gens.emplace_back(p, c);
  return Subspace::Span(gens, p, n);
}

TEST(SelfsufficientTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  EXPECT_TRUE(s1.IsSelfsufficient(Subspace::Full(2, 3)));
  EXPECT_TRUE(s1.IsSelfsufficient(Sub("1,0,0")));
  const SelfsufficiencyVerdict v = s2.CheckSelfsufficient(Sub("1,0,0"));
  EXPECT_FALSE(v.selfsufficient);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LT(s2.Delta(*v.witness), s2.Delta(Sub("1,0,0")));
}

TEST(CssTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  EXPECT_EQ(s2.Css(Sub("1,0,0")), Subspace::Full(2, 3));
  EXPECT_EQ(s1.Css(Sub("1,0,0")), Sub("1,0,0"));
  EXPECT_EQ(s1.Css(Sub("1,0,0;0,0,1")), Sub("1,0,0;0,0,1"));
}

TEST(DkTest, Examples) {
  EXPECT_EQ(ClosureEngine(S1()).Dk({}).value, 0);
  EXPECT_EQ(ClosureEngine(S2()).Dk(Vecs("1,0,0")).value, 0);
  EXPECT_EQ(ClosureEngine(S1()).Dk(Vecs("1,0,0")).value, 1);
}

TEST(InClosureTest, Examples) {
  const ClosureEngine s1(S1());
  EXPECT_TRUE(s1.InClosure(Vecs("1,0,0"), Vecs("1,0,0;0,0,1")));
  EXPECT_TRUE(s1.InClosure(Vecs("0,1,0"), Vecs("1,0,0")));
  EXPECT_FALSE(s1.InClosure(Vecs("0,0,1"), Vecs("1,0,0")));
}

TEST(ClosureSetTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  const ClosureSet full = s1.ClosureOf(Subspace::Full(2, 3));
  EXPECT_EQ(full.members.size(), 8u);
  const ClosureSet c = s1.ClosureOf(Sub("1,0,0"));
  ASSERT_TRUE(c.subspace.has_value());
  EXPECT_EQ(*c.subspace, Sub("1,0,0;0,1,0"));
  EXPECT_EQ(c.members.size(), 4u);
  const ClosureSet z = s2.ClosureOf(Subspace::Zero(2, 3));
  ASSERT_TRUE(z.subspace.has_value());
  EXPECT_EQ(*z.subspace, Subspace::Full(2, 3));
}

TEST(DeltaRelTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  const Subspace h = Sub("1,0,0");
  EXPECT_EQ(s1.DeltaRel(h, h).minimum.value, 0);
  EXPECT_EQ(s2.DeltaRel(Sub("1,0,0"), Subspace::Zero(2, 3)).minimum.value, 1);
  const RelativeDelta r = s1.DeltaRel(Sub("1,0,0;0,1,0"), h);
  EXPECT_EQ(r.minimum.value, 0);
  EXPECT_EQ(r.closed_form.value, 0);
  EXPECT_EQ(r.attained_by, Sub("1,0,0;0,1,0"));
}

TEST(DeltaRelTest, RequiresSelfsufficientBase) {
  const ClosureEngine s2(S2());
  try {
    s2.DeltaRel(Subspace::Full(2, 3), Sub("1,0,0"));
    FAIL() << "expected NotSelfsufficient";
  } catch (const NotSelfsufficient& e) {
    EXPECT_EQ(e.subspace(), Sub("1,0,0"));
    EXPECT_LT(s2.Delta(e.witness()), s2.Delta(Sub("1,0,0")));
  }
  EXPECT_THROW(s2.MinimalExtensions(Sub("1,0,0")), NotSelfsufficient);
  EXPECT_THROW(s2.Chain(Sub("1,0,0")), NotSelfsufficient);
}

TEST(MinimalExtensionsTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  EXPECT_TRUE(s1.MinimalExtensions(Subspace::Full(2, 3)).empty());
  EXPECT_EQ(s2.MinimalExtensions(Subspace::Zero(2, 3)),
            std::vector<Subspace>{Subspace::Full(2, 3)});
  EXPECT_EQ(s1.MinimalExtensions(Sub("1,0,0")),
            std::vector<Subspace>{Sub("1,0,0;0,1,0")});
}

TEST(ChainTest, Examples) {
  const ClosureEngine s1(S1());
  const ClosureEngine s2(S2());
  const ClosureReport fixed = s1.Chain(Subspace::Full(2, 3));
  EXPECT_EQ(fixed.chain.size(), 1u);
  EXPECT_TRUE(fixed.reaches_closure);
  EXPECT_EQ(s2.Chain(Subspace::Zero(2, 3)).chain,
            (std::vector<Subspace>{Subspace::Zero(2, 3),
                                   Subspace::Full(2, 3)}));
  const ClosureReport r = s1.Chain(Sub("1,0,0"));
  EXPECT_EQ(r.chain, (std::vector<Subspace>{Sub("1,0,0"),
                                            Sub("1,0,0;0,1,0")}));
  EXPECT_TRUE(r.reaches_closure);
  EXPECT_EQ(r.dk.value, 1);
}

TEST(ChainTest, MachineRendering) {
  const ClosureReport r = ClosureEngine(S1()).Chain(Sub("1,0,0"));
  EXPECT_EQ(RenderMachine(r),
            "format 1\n"
            "input 1,0,0\n"
            "css 1,0,0\n"
            "dk_scaled 1\n"
            "dk_rational 1\n"
            "closure_subspace yes\n"
            "closure_dim 2\n"
            "closure 1,0,0;0,1,0\n"
            "chain_length 2\n"
            "chain 0 1,0,0\n"
            "extensions 0 1,0,0;0,1,0\n"
            "chain 1 1,0,0;0,1,0\n"
            "extensions 1 -\n"
            "reaches_closure yes\n");
  EXPECT_EQ(RenderText(r), RenderText(ClosureEngine(S1()).Chain(
                               Sub("1,0,0"))));
}

TEST(FreeStructureTest, EverythingIsSelfsufficient) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const BilinearStructure s = FreeStructure(4, 2, k);
    const ClosureEngine engine(s);
    for (const Subspace& h : engine.lattice().subspaces()) {
      EXPECT_EQ(engine.Delta(h).value, static_cast<std::int64_t>(k * h.dim()));
      EXPECT_TRUE(engine.IsSelfsufficient(h));
      EXPECT_EQ(engine.Css(h), h);
      const ClosureSet c = engine.ClosureOf(h);
      ASSERT_TRUE(c.subspace.has_value());
      EXPECT_EQ(*c.subspace, h);
    }
  }
}

// Every operation agrees with its literal definition on every structure over
// F_2^3 and every k in {1, 2}.
TEST(ClosureOracleTest, AllStructuresInDimensionThree) {
  const auto relation_spaces = EnumerateSubspaces(3, 2);
  for (std::uint32_t k = 1; k <= 2; ++k) {
    for (const Subspace& rel : relation_spaces) {
      const BilinearStructure s(2, 3, k, rel);
      const ClosureEngine engine(s);
      const Oracle o(s);
      for (const auto& [hs, d] : o.all()) {
        const Subspace h = FromSet(hs, 2, 3);
        SCOPED_TRACE(SerializeStructure(s) + "H = " + FormatSubspace(h));
        EXPECT_EQ(engine.Delta(h).value, d);
        EXPECT_EQ(engine.IsSelfsufficient(h), o.Selfsufficient(hs));
        EXPECT_EQ(oracle::ToSet(engine.Css(h)), o.Css(hs));
        EXPECT_EQ(engine.Dk(h.Basis()).value, o.Dk(hs));
        const ClosureSet c = engine.ClosureOf(h);
        std::set<oracle::Coords> members;
        for (const FpVector& v : c.members) {
          members.insert(oracle::ToCoords(v));
        }
        EXPECT_EQ(members, o.Closure(hs));
        if (!o.Selfsufficient(hs)) continue;
        std::set<VecSet> exts;
        for (const Subspace& e : engine.MinimalExtensions(h)) {
          exts.insert(oracle::ToSet(e));
        }
        EXPECT_EQ(exts, o.MinimalExtensions(hs));
        for (const auto& [ks, kd] : o.all()) {
          EXPECT_EQ(engine.DeltaRel(FromSet(ks, 2, 3), h).minimum.value,
                    o.DeltaRel(ks, hs));
        }
      }
    }
  }
}

TEST(ClosureEngineTest, FaultHookShiftsDelta) {
  const auto ambient = std::make_shared<const Ambient>(3, 2);
  const ClosureEngine engine(
      S1(), ambient,
      [](std::size_t i, std::int64_t v) { return i == 0 ? v + 1 : v; });
  EXPECT_EQ(engine.Delta(Subspace::Zero(2, 3)).value, 1);
  EXPECT_EQ(engine.Delta(Sub("1,0,0")).value, 1);
}

TEST(ClosureEngineTest, GuardrailIsEnforced) {
  EXPECT_THROW(ClosureEngine(S1(), 10), GuardrailExceeded);
}

}  // namespace
}  // namespace predim
