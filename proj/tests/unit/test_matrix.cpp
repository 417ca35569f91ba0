/*
 *   Copyright 2026 The maxalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "maxalg/maxalg.hpp"
#include "maxalg/verify/fixtures.hpp"
#include "maxalg/verify/oracles.hpp"

using namespace maxalg;
namespace fx = maxalg::verify::fixtures;

namespace {
constexpr double kExact = 1e-12;
}

TEST(MaxMatrix, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(MaxMatrix({{1, -0.5}, {0, 1}}), PreconditionError);
  EXPECT_THROW(MaxMatrix(2, {1, 0, 0, std::numeric_limits<double>::infinity()}), PreconditionError);
  EXPECT_THROW(MaxMatrix(2, {1, 0, 0}), DimensionError);
  EXPECT_THROW(MaxMatrix(0), DimensionError);
}

TEST(MaxMul, SquaresSwap) {
  EXPECT_EQ(max_mul(fx::swap2(), fx::swap2()), (MaxMatrix{{1, 0.5}, {0.5, 1}}));
}

TEST(MaxMul, IdentityIsNeutral) {
  const MaxMatrix a = fx::three_vertex();
  EXPECT_EQ(max_mul(MaxMatrix::identity(3), a), a);
  EXPECT_EQ(max_mul(a, MaxMatrix::identity(3)), a);
}

TEST(MaxMul, MatchesTripleLoop) {
  verify::Generator gen(11);
  for (int k = 0; k < 20; ++k) {
    const MaxMatrix a = gen.matrix(4, 0, 3, 0.2);
    const MaxMatrix b = gen.matrix(4, 0, 3, 0.2);
    EXPECT_EQ(max_mul(a, b), verify::naive_mul(a, b));
  }
}

TEST(MaxMul, DimensionMismatch) {
  EXPECT_THROW(max_mul(MaxMatrix(2), MaxMatrix(3)), DimensionError);
  EXPECT_THROW(max_mul(MaxMatrix(2), MaxVector{1, 2, 3}), DimensionError);
}

TEST(MaxMul, Vector) {
  EXPECT_EQ(max_mul(fx::swap2(), MaxVector{1, 0}), (MaxVector{0.5, 1}));
}

TEST(MaxPow, ZeroAndOne) {
  const MaxMatrix a = fx::three_vertex();
  EXPECT_EQ(max_pow(a, 0), MaxMatrix::identity(3));
  EXPECT_EQ(max_pow(a, 1), a);
}

TEST(MaxPow, Square) {
  EXPECT_TRUE(approx_equal(max_pow(fx::three_vertex(), 2),
                           MaxMatrix{{1, 0.5, 6}, {0.5, 1, 5.4}, {0, 0, 0.81}}, kExact));
}

TEST(MaxPow, SquaringAgreesWithLinear) {
  const MaxMatrix a = fx::three_vertex();
  MaxMatrix p = MaxMatrix::identity(3);
  for (std::size_t k = 1; k <= 12; ++k) {
    p = max_mul(p, a);
    EXPECT_TRUE(approx_equal(max_pow(a, k), p, kExact)) << k;
  }
}

TEST(KleeneStar, ZeroGivesIdentity) {
  EXPECT_EQ(kleene_star(MaxMatrix(3)), MaxMatrix::identity(3));
}

TEST(KleeneStar, Swap) {
  EXPECT_EQ(kleene_star(fx::swap2()), MaxMatrix::ones(2));
}

TEST(KleeneStar, ThreeVertex) {
  const MaxMatrix a = fx::three_vertex();
  const MaxMatrix want = max_add(max_add(MaxMatrix::identity(3), a), max_pow(a, 2));
  EXPECT_TRUE(approx_equal(kleene_star(a), want, kExact));
  // frozen by hand: star = [[1,1,6],[1,1,6],[0,0,1]]
  EXPECT_TRUE(approx_equal(kleene_star(a), MaxMatrix{{1, 1, 6}, {1, 1, 6}, {0, 0, 1}}, kExact));
}

TEST(BoolResidualSplit, Swap) {
  const auto s = bool_residual_split(fx::swap2());
  EXPECT_EQ(s.boolean_part, (MaxMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(s.residual_part, (MaxMatrix{{0.5, 0}, {0, 0.5}}));
}

TEST(BoolResidualSplit, IdentityAndHalves) {
  const auto id = bool_residual_split(MaxMatrix::identity(3));
  EXPECT_EQ(id.boolean_part, MaxMatrix::identity(3));
  EXPECT_TRUE(id.residual_part.is_zero());
  const MaxMatrix half = scale(MaxMatrix::ones(3), 0.5);
  const auto h = bool_residual_split(half);
  EXPECT_TRUE(h.boolean_part.is_zero());
  EXPECT_EQ(h.residual_part, half);
}

TEST(BoolResidualSplit, RejectsEntriesAboveOne) {
  EXPECT_THROW(bool_residual_split(fx::three_vertex()), PreconditionError);
}

TEST(DiagNilpotentSplit, ThreeVertex) {
  const MaxMatrix a = fx::three_vertex();
  const auto s = diag_nilpotent_split(a, frobenius_form(a));
  EXPECT_EQ(s.diagonal_part, (MaxMatrix{{0.2, 1, 0}, {1, 0.5, 0}, {0, 0, 0.9}}));
  EXPECT_EQ(s.nilpotent_part, (MaxMatrix{{0, 0, 4}, {0, 0, 6}, {0, 0, 0}}));
}

TEST(DiagNilpotentSplit, IrreducibleHasNoNilpotentPart) {
  const auto s = diag_nilpotent_split(fx::swap2(), frobenius_form(fx::swap2()));
  EXPECT_EQ(s.diagonal_part, fx::swap2());
  EXPECT_TRUE(s.nilpotent_part.is_zero());
}

TEST(DiagNilpotentSplit, StrictlyUpper) {
  const MaxMatrix u{{0, 2, 3}, {0, 0, 4}, {0, 0, 0}};
  const auto s = diag_nilpotent_split(u, frobenius_form(u));
  EXPECT_TRUE(s.diagonal_part.is_zero());
  EXPECT_EQ(s.nilpotent_part, u);
}

TEST(DiagNilpotentSplit, MismatchedForm) {
  EXPECT_THROW(diag_nilpotent_split(fx::swap2(), frobenius_form(fx::three_vertex())),
               DimensionError);
}

TEST(Clamp, DropsSmallEntries) {
  const MaxMatrix a{{1e-10, 2}, {0.5, 3e-9}};
  EXPECT_EQ(clamp_small(a, Tolerances{}), (MaxMatrix{{0, 2}, {0.5, 3e-9}}));
}
