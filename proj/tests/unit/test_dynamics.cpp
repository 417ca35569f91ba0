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
const MaxMatrix kSwap01{{0, 1}, {1, 0}};
}  // namespace

TEST(BooleanPeriod, Basic) {
  const PeriodReport s = boolean_period(kSwap01);
  EXPECT_EQ(s.q, 2u);
  EXPECT_EQ(s.t0, 0u);
  EXPECT_EQ(boolean_period(MaxMatrix::identity(3)).q, 1u);
}

TEST(BooleanPeriod, TripleBooleanParts) {
  const std::size_t want[] = {3, 3, 2};
  const auto mats = fx::commuting_triple();
  for (std::size_t i = 0; i < 3; ++i) {
    // unit entries only
    std::vector<double> e;
    for (double x : mats[i].entries()) e.push_back(x == 1.0 ? 1.0 : 0.0);
    EXPECT_EQ(boolean_period(MaxMatrix(5, e)).q, want[i]) << i;
  }
}

TEST(BooleanPeriod, LcmAcrossComponents) {
  // a 2-cycle and a disjoint 3-cycle
  MaxMatrix b(5, {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0});
  const PeriodReport r = boolean_period(b);
  EXPECT_EQ(r.q, 6u);
  const OracleTrace tr = oracle_iterate(b, 50);
  EXPECT_EQ(tr.q, 6u);
  EXPECT_EQ(tr.t0, r.t0);
}

TEST(BooleanPeriod, RejectsNonBoolean) {
  EXPECT_THROW(boolean_period(fx::swap2()), PreconditionError);
}

TEST(BooleanPeriod, TransientFromWielandtMatrix) {
  // primitive with the largest transient for n=4: (n-1)^2 + 1 = 10
  const MaxMatrix w{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}};
  const PeriodReport r = boolean_period(w);
  EXPECT_EQ(r.q, 1u);
  EXPECT_EQ(r.t0, 10u);
}

TEST(ElsnerPeriod, Cases) {
  const PeriodReport s = elsner_period(fx::swap2());
  EXPECT_EQ(s.q, 2u);
  EXPECT_EQ(s.t0, 1u);
  EXPECT_EQ(elsner_period(MaxMatrix::ones(2)).q, 1u);
  const MaxMatrix block{{0.2, 1}, {1, 0.5}};
  const PeriodReport b = elsner_period(block);
  EXPECT_EQ(b.q, 2u);
  EXPECT_EQ(b.t0, 2u);
  EXPECT_EQ(max_pow(block, 2), (MaxMatrix{{1, 0.5}, {0.5, 1}}));
  EXPECT_EQ(max_pow(block, 3), fx::swap2());
}

TEST(ElsnerPeriod, Errors) {
  EXPECT_THROW(elsner_period(fx::three_vertex()), PreconditionError);
  EXPECT_THROW(elsner_period(scale(fx::swap2(), 0.5)), PreconditionError);
}

TEST(PowerLimit, Swap) {
  const PowerLimit pl = power_limit(fx::swap2());
  ASSERT_EQ(pl.q, 2u);
  EXPECT_EQ(pl.at(1), fx::swap2());
  EXPECT_EQ(pl.at(2), (MaxMatrix{{1, 0.5}, {0.5, 1}}));
  EXPECT_EQ(pl.at(0), pl.at(2));
  EXPECT_TRUE(limits_coherent(fx::swap2(), pl));
}

TEST(PowerLimit, ThreeVertex) {
  const PowerLimit pl = power_limit(fx::three_vertex());
  ASSERT_EQ(pl.q, 2u);
  EXPECT_TRUE(approx_equal(pl.at(1), fx::three_vertex_odd_limit(), kExact));
  EXPECT_TRUE(approx_equal(pl.at(2), fx::three_vertex_even_limit(), kExact));
  // 0.9^t first drops below 1e-9 at t = 197
  EXPECT_EQ(pl.t0, 197u);
}

TEST(PowerLimit, NilpotentLimitIsZero) {
  const PowerLimit pl = power_limit(MaxMatrix{{0, 3, 1}, {0, 0, 2}, {0, 0, 0}});
  EXPECT_EQ(pl.q, 1u);
  EXPECT_TRUE(pl.at(1).is_zero());
  EXPECT_EQ(pl.t0, 3u);
}

TEST(PowerLimit, MixedBlockPeriods) {
  // 2-cycle and 3-cycle at mu = 1 coupled through a decaying vertex
  MaxMatrix a(6, {0, 1, 0.5, 0, 0, 0,
                  1, 0, 0,   0, 0, 0,
                  0, 0, 0.3, 2, 0, 0,
                  0, 0, 0,   0, 1, 0,
                  0, 0, 0,   0, 0, 1,
                  0, 0, 0,   1, 0, 0});
  const PowerLimit pl = power_limit(a);
  EXPECT_EQ(pl.q, 6u);
  EXPECT_TRUE(limits_coherent(a, pl));
  const OracleTrace tr = oracle_iterate(a, 500);
  ASSERT_EQ(tr.outcome, OracleOutcome::cycle);
  EXPECT_EQ(tr.q, 6u);
}

TEST(PowerLimit, DivergentThrows) {
  EXPECT_THROW(power_limit(MaxMatrix{{2, 0}, {0, 1}}), PreconditionError);
}

TEST(PowerLimit, AgreesWithOracleOnRandomSubunit) {
  verify::Generator gen(41);
  for (int t = 0; t < 60; ++t) {
    MaxMatrix a = gen.matrix_from(gen.dimension(1, 5), {0, 0, 0.25, 0.5, 1, 2});
    const double m = mu(a);
    if (m == 0) continue;
    a = scale(a, 1.0 / m);
    const PowerLimit pl = power_limit(a);
    EXPECT_TRUE(limits_coherent(a, pl)) << to_string(a);
    // t0 onward, powers match the limits
    MaxMatrix p = max_pow(a, pl.t0);
    for (std::size_t k = 0; k < 2 * pl.q; ++k) {
      EXPECT_TRUE(settled_equal(p, pl.at(pl.t0 + k), Tolerances{})) << to_string(a);
      p = max_mul(p, a);
    }
  }
}

TEST(PeriodicPoint, Swap) {
  const PowerLimit pl = power_limit(fx::swap2());
  const PeriodicPoint x1 = periodic_point(fx::swap2(), {1, 1}, pl, 1);
  EXPECT_EQ(x1.point, (MaxVector{1, 1}));
  EXPECT_EQ(x1.period, 1u);
  const PeriodicPoint y1 = periodic_point(fx::swap2(), {1, 0}, pl, 1);
  EXPECT_EQ(y1.point, (MaxVector{0.5, 1}));
  EXPECT_EQ(y1.period, 2u);
}

TEST(PeriodicPoint, Errors) {
  const PowerLimit pl = power_limit(fx::swap2());
  EXPECT_THROW(periodic_point(fx::swap2(), {1, 1}, pl, 0), PreconditionError);
  EXPECT_THROW(periodic_point(fx::swap2(), {1, 1}, pl, 3), PreconditionError);
  EXPECT_THROW(periodic_point(fx::swap2(), {1, 1, 1}, pl, 1), DimensionError);
}

TEST(PeriodicPoint, PeriodDividesQ) {
  verify::Generator gen(42);
  const MaxMatrix a = fx::commuting_triple()[0];
  const PowerLimit pl = power_limit(a);
  for (int t = 0; t < 20; ++t) {
    const MaxVector x = gen.vector(5, 0, 3);
    for (std::size_t j = 1; j <= pl.q; ++j) {
      EXPECT_EQ(pl.q % periodic_point(a, x, pl, j).period, 0u);
    }
  }
}

TEST(Word, ParseAndCounts) {
  const Word w = Word::parse("1, 2,1");
  EXPECT_EQ(w.letters(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(w.counts(3), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_FALSE(w.uses_every_letter(3));
  EXPECT_TRUE(w.uses_every_letter(2));
  EXPECT_EQ(w.to_string(), "1,2,1");
  EXPECT_THROW(Word::parse("1,,2"), ParseError);
  EXPECT_THROW(Word::parse("0"), ParseError);
  EXPECT_THROW(Word({}), PreconditionError);
}

TEST(WordProduct, Order) {
  const auto m = fx::commuting_triple();
  EXPECT_EQ(word_product(m, Word({2})), m[1]);
  const std::vector<MaxMatrix> nc{MaxMatrix{{0, 1}, {0, 0}}, MaxMatrix{{0, 0}, {1, 0}}};
  // letter 1 acts first: A2 (x) A1
  EXPECT_EQ(word_product(nc, Word({1, 2})), max_mul(nc[1], nc[0]));
  EXPECT_THROW(word_product(m, Word({4})), PreconditionError);
}

TEST(WordProduct, CommutingCountsForm) {
  const auto m = fx::commuting_triple();
  const Word w({3, 1, 2, 1, 3, 3});
  const MaxMatrix counts_form =
      max_mul(max_mul(max_pow(m[0], 2), max_pow(m[1], 1)), max_pow(m[2], 3));
  EXPECT_TRUE(approx_equal(word_product(m, w), counts_form, kExact));
}

TEST(CommutingWordLimit, Cases) {
  const auto m = fx::commuting_triple();
  const WordLimit i = commuting_word_limit(m, Word({1, 2}));
  EXPECT_EQ(i.limit.q, 3u);
  EXPECT_EQ(i.cycle_period, 1u);
  for (const auto& l : i.limit.limits) EXPECT_TRUE(approx_equal(l, max_mul(m[0], m[1]), kExact));

  const WordLimit ii = commuting_word_limit(m, Word({2, 3}));
  EXPECT_EQ(ii.limit.q, 6u);
  EXPECT_EQ(ii.cycle_period, 3u);

  // single letter reduces to the power limit
  const WordLimit single = commuting_word_limit(m, Word({1}));
  const PowerLimit pl = power_limit(m[0]);
  ASSERT_EQ(single.limit.q, pl.q);
  for (std::size_t j = 1; j <= pl.q; ++j) EXPECT_TRUE(approx_equal(single.limit.at(j), pl.at(j), kExact));
}

TEST(CommutingWordLimit, QIndependentOfWord) {
  const auto m = fx::commuting_triple();
  for (const char* w : {"1,2,3", "3,2,1", "1,1,2,3", "2,3,3,1,2", "1,2,3,3,3,3"}) {
    const WordLimit wl = commuting_word_limit(m, Word::parse(w));
    EXPECT_EQ(wl.limit.q, 6u) << w;
    EXPECT_TRUE(wl.cycle_period == 1 || wl.cycle_period == 3) << w;
    EXPECT_TRUE(limits_coherent(word_product(m, Word::parse(w)), wl.limit)) << w;
  }
}

TEST(CommutingWordLimit, Errors) {
  const std::vector<MaxMatrix> nc{MaxMatrix{{0, 1}, {0, 0}}, MaxMatrix{{0, 0}, {1, 0}}};
  try {
    commuting_word_limit(nc, Word({1, 2}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("1 and 2"), std::string::npos);
  }
  EXPECT_THROW(commuting_word_limit({MaxMatrix{{2}}, MaxMatrix{{1}}}, Word({1, 2})),
               PreconditionError);
}

TEST(TwoMatrixBooleanLimit, Identity) {
  const MaxMatrix id = MaxMatrix::identity(2);
  const BooleanWordLimit b = two_matrix_boolean_limit(id, id, Word({1, 2}));
  EXPECT_EQ(b.t0, 0u);
  EXPECT_EQ(b.q, 1u);
  EXPECT_EQ(b.cycle.front(), id);
}

TEST(TwoMatrixBooleanLimit, SwapAndItsSquare) {
  const BooleanWordLimit b =
      two_matrix_boolean_limit(kSwap01, max_pow(kSwap01, 2), Word({1, 2}));
  EXPECT_EQ(b.q, 2u);
  EXPECT_EQ(b.cycle_period, 2u);
  EXPECT_EQ(b.member.size(), 2u);
}

TEST(TwoMatrixBooleanLimit, TripleFirstAndThird) {
  const auto m = fx::commuting_triple();
  const BooleanWordLimit b = two_matrix_boolean_limit(m[0], m[2], Word({1, 2}));
  EXPECT_EQ(b.q, 6u);
  EXPECT_EQ(b.t0, 2u);
  EXPECT_EQ(b.cycle_period, 6u);
  EXPECT_EQ(b.member, (std::vector<std::size_t>{7, 2, 3, 4, 5, 6}));
}

TEST(TwoMatrixBooleanLimit, RejectsFractionalEigenvalue) {
  EXPECT_THROW(two_matrix_boolean_limit(MaxMatrix{{0.5}}, MaxMatrix{{1}}, Word({1, 2})),
               PreconditionError);
}

TEST(CommonEigenbasis, SharedPair) {
  const auto m = fx::shared_eigen_pair();
  const MaxVector e3{0, 0, 1, 0, 0};
  const CommonEigenbasis b = common_eigenbasis(m, {fx::shared_u(), fx::shared_v(), e3});
  EXPECT_EQ(b.persistent, (std::vector<std::size_t>{0}));
  EXPECT_EQ(b.transient, (std::vector<std::size_t>{1}));
  EXPECT_EQ(b.rejected, (std::vector<std::size_t>{2}));
  EXPECT_NEAR(b.eigenvalues[0][0], 1.0, kExact);
  EXPECT_NEAR(b.eigenvalues[0][1], 0.9, kExact);
  EXPECT_NEAR(b.eigenvalues[1][0], 1.0, kExact);
  EXPECT_NEAR(b.eigenvalues[1][1], 1.0, kExact);
}

TEST(CommonEigenbasis, Errors) {
  const auto m = fx::shared_eigen_pair();
  EXPECT_THROW(common_eigenbasis(m, {}), PreconditionError);
  EXPECT_THROW(common_eigenbasis(m, {MaxVector(5, 0.0)}), PreconditionError);
  EXPECT_THROW(common_eigenbasis({MaxMatrix{{2}}}, {MaxVector{1}}), PreconditionError);
}

TEST(LcLimit, SharedPair) {
  const auto m = fx::shared_eigen_pair();
  const CommonEigenbasis b = common_eigenbasis(m, {fx::shared_u(), fx::shared_v()});
  const LcLimit l = lc_limit(m, b, {0.5, 40}, Word({1, 2}));
  EXPECT_TRUE(approx_equal(l.xi, scale(fx::shared_u(), 0.5), kExact));

  const LcLimit zero = lc_limit(m, b, {0, 0}, Word({2, 1}));
  EXPECT_EQ(zero.xi, MaxVector(5, 0.0));

  const LcLimit u = lc_limit(m, b, {1, 0}, Word({1, 2}));
  EXPECT_EQ(u.xi, fx::shared_u());
  EXPECT_EQ(u.steps, 1u);
}

TEST(LcLimit, Errors) {
  const auto m = fx::shared_eigen_pair();
  const CommonEigenbasis b = common_eigenbasis(m, {fx::shared_u(), fx::shared_v()});
  EXPECT_THROW(lc_limit(m, b, {1, 1}, Word({1, 1})), PreconditionError);
  EXPECT_THROW(lc_limit(m, b, {1}, Word({1, 2})), DimensionError);
  EXPECT_THROW(lc_limit(m, b, {1, -1}, Word({1, 2})), PreconditionError);
}

TEST(Oracle, Cases) {
  const OracleTrace id = oracle_iterate(MaxMatrix::identity(3), 5);
  EXPECT_EQ(id.outcome, OracleOutcome::cycle);
  EXPECT_EQ(id.t0, 0u);
  EXPECT_EQ(id.q, 1u);

  const OracleTrace sw = oracle_iterate(fx::swap2(), 10);
  EXPECT_EQ(sw.outcome, OracleOutcome::cycle);
  EXPECT_EQ(sw.t0, 1u);
  EXPECT_EQ(sw.q, 2u);
  EXPECT_TRUE(sw.exact);

  const OracleTrace half = oracle_iterate(scale(MaxMatrix::identity(2), 0.5), 100);
  EXPECT_EQ(half.outcome, OracleOutcome::converges_to_zero);
  EXPECT_EQ(half.zero_step, 30u);  // 2^-30 < 1e-9 < 2^-29

  const OracleTrace cut = oracle_iterate(fx::three_vertex(), 50);
  EXPECT_EQ(cut.outcome, OracleOutcome::inconclusive);
  EXPECT_THROW(oracle_iterate(fx::swap2(), 0), PreconditionError);
}

TEST(Cancellation, ProgressHookStopsIteration) {
  IterationOptions o;
  o.progress = [](std::size_t step) { return step < 3; };
  EXPECT_THROW(oracle_iterate(fx::three_vertex(), 1000, o), InconclusiveError);
}

TEST(Cancellation, StepCap) {
  IterationOptions o;
  o.max_steps = 2;
  const MaxMatrix w{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}};
  EXPECT_THROW(boolean_period(w, o), InconclusiveError);
}
