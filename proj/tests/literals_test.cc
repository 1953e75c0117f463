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

#include "predim/literals.h"

#include "gtest/gtest.h"
#include "predim/errors.h"

namespace predim {
namespace {

TEST(LiteralsTest, VectorRoundTrip) {
  const FpVector v = ParseVector("1,0,2", 3, 3);
  EXPECT_EQ(v, FpVector(3, {1, 0, 2}));
  EXPECT_EQ(FormatVector(v), "1,0,2");
  EXPECT_EQ(ParseVector(" 1 , 1 ", 2, 2), FpVector(2, {1, 1}));
}

TEST(LiteralsTest, VectorErrors) {
  EXPECT_THROW(ParseVector("1,0", 2, 3), ParseError);
  EXPECT_THROW(ParseVector("1,2", 2, 2), ParseError);
  EXPECT_THROW(ParseVector("1,x", 2, 2), ParseError);
  EXPECT_THROW(ParseVector("1,,0", 2, 3), ParseError);
  EXPECT_THROW(ParseVector("-1,0", 3, 2), ParseError);
}

TEST(LiteralsTest, SubspaceIsCanonicalized) {
  const Subspace s = ParseSubspace("1,1,0;0,1,0", 2, 3);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(FormatSubspace(s), "1,0,0;0,1,0");
  EXPECT_EQ(ParseSubspace("0", 2, 3), Subspace::Zero(2, 3));
  EXPECT_EQ(FormatSubspace(Subspace::Zero(2, 3)), "0");
}

TEST(LiteralsTest, VectorListMayBeEmpty) {
  EXPECT_TRUE(ParseVectorList("", 2, 3).empty());
  EXPECT_EQ(ParseVectorList("1,0,0;0,0,1", 2, 3).size(), 2u);
}

}  // namespace
}  // namespace predim
