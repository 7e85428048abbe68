// Copyright 2026 The qbagslf Authors
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

#include "qbagslf/slf.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qbagslf/error.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace qbagslf {
namespace {

class RunningChain : public ::testing::Test {
 protected:
  StrengthMatrix m = evaluate_chain(testing::running_chain());
};

class SweepChain : public ::testing::Test {
 protected:
  StrengthMatrix m = evaluate_chain(testing::three_step_sweep());
};

// Edgeless and repeated, so every topic has the same exceed count.
StrengthMatrix uniform_matrix() {
  const Qbag g = build_qbag({{"p", 0.4}, {"q", 0.6}, {"r", 0.9}}, {}, {});
  return evaluate_chain(Chain({g, g}));
}

TEST_F(RunningChain, StrongSafety) {
  EXPECT_TRUE(is_strongly_safe(m, {{"c"}, 0.1}));
  // sigma(c) == 0.2 at every step and comparisons are >=.
  EXPECT_TRUE(is_strongly_safe(m, {{"c"}, 0.2}));
  EXPECT_FALSE(is_strongly_safe(m, {{"b"}, 0.1}));
}

TEST_F(RunningChain, WeakSafety) {
  EXPECT_TRUE(is_weakly_safe(m, {{"b"}, 0.1}));
  EXPECT_TRUE(is_weakly_safe(m, {{"a", "b", "c"}, 0.2}));
  EXPECT_FALSE(is_weakly_safe(m, {{"a"}, 0.51}));
}

TEST_F(RunningChain, Fluctuations) {
  EXPECT_EQ(fluctuation_count(m, "c", 0.2), 0);
  EXPECT_EQ(fluctuation_count(m, "b", 0.2), 2);
  EXPECT_EQ(fluctuation_count(m, "a", 0.1), 0);
}

TEST_F(RunningChain, Liveness) {
  EXPECT_TRUE(is_live(m, {{"a", "b"}, 0.2}));
  EXPECT_FALSE(is_live(m, {{"c"}, 0.2}));
  EXPECT_TRUE(is_live(m, {{"b"}, 0.1}));
}

TEST_F(RunningChain, BinaryFairness) {
  const SlfQuery abc{{"a", "b", "c"}, 0.2};
  EXPECT_FALSE(is_ideally_fair(m, abc));
  EXPECT_TRUE(is_lively_fair(m, abc));
  EXPECT_TRUE(is_cautiously_fair(m, abc));

  // No strongly safe member: a dips to 0.1, b to 0.0.
  EXPECT_TRUE(is_ideally_fair(m, {{"a", "b"}, 0.2}));
  EXPECT_TRUE(is_ideally_fair(m, {{"c"}, 0.1}));
  // No weakly safe member.
  EXPECT_TRUE(is_lively_fair(m, {{"a", "b"}, 0.9}));
  // {a} is strongly safe at 0.1 (0.6, 0.1, 0.5), so this is not vacuous.
  ASSERT_TRUE(is_strongly_safe(m, {{"a"}, 0.1}));
  EXPECT_TRUE(is_cautiously_fair(m, {{"a", "b"}, 0.1}));
}

TEST_F(RunningChain, ExceedCounts) {
  EXPECT_EQ(exceed_count(m, "a", 0.2), 2);
  EXPECT_EQ(exceed_count(m, "c", 0.2), 3);
  for (const auto* x : {"a", "b", "c"}) EXPECT_EQ(exceed_count(m, x, 0.0), 3);
}

TEST_F(RunningChain, CurveAndLine) {
  const SlfQuery q{{"a", "b", "c"}, 0.2};
  EXPECT_EQ(exceedance_ordering(m, q), (std::vector<ArgumentId>{"a", "b", "c"}));
  EXPECT_EQ(safety_curve(m, q),
            (std::vector<CurvePoint>{{0, 0}, {1, 2}, {2, 4}, {3, 7}}));
  const FairnessLine line = fairness_line(m, q);
  EXPECT_EQ(line.slope, Rational(7, 3));
  EXPECT_EQ(line.start, (CurvePoint{0, 0}));
  EXPECT_EQ(line.end, (CurvePoint{3, 7}));

  EXPECT_EQ(safety_curve(m, {{"c"}, 0.2}), (std::vector<CurvePoint>{{0, 0}, {1, 3}}));
  EXPECT_EQ(fairness_line(m, {{"c"}, 0.2}).slope, Rational(3));
  EXPECT_EQ(fairness_line(m, {{"a", "b"}, 0.95}).slope, Rational(0));
}

TEST_F(RunningChain, GiniScores) {
  const SlfQuery q{{"a", "b", "c"}, 0.2};
  // Piecewise: 1/6 + 1/2 + 1/3.
  EXPECT_EQ(gini_unnormalized(m, q), Rational(1));
  EXPECT_NEAR(gini_fairness(m, q), 0.46212, 1e-5);
}

TEST_F(RunningChain, ShannonScores) {
  const SlfQuery q{{"a", "b", "c"}, 0.2};
  const auto p = exceed_distribution(m, q);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (Distribution{{"a", Rational(2, 7)}, {"b", Rational(2, 7)}, {"c", Rational(3, 7)}}));
  EXPECT_EQ(shannon_base(*p), 7);
  EXPECT_NEAR(shannon_fairness(m, q), 0.55449, 1e-5);

  EXPECT_FALSE(exceed_distribution(m, {{"a", "b", "c"}, 0.9}).has_value());
  EXPECT_EQ(shannon_fairness(m, {{"a", "b", "c"}, 0.9}), 1.0);

  const auto single = exceed_distribution(m, {{"c"}, 0.2});
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->at("c"), Rational(1));
  EXPECT_EQ(shannon_base(*single), 1);
  EXPECT_EQ(shannon_fairness(m, {{"c"}, 0.2}), 1.0);
}

TEST_F(RunningChain, QueryValidation) {
  auto code = [&](const SlfQuery& q) {
    try {
      is_live(m, q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidDocument;
  };
  EXPECT_EQ(code({{"d"}, 0.2}), ErrorCode::TopicNotInChain);
  EXPECT_EQ(code({{"z"}, 0.2}), ErrorCode::TopicNotInChain);
  EXPECT_EQ(code({{}, 0.2}), ErrorCode::EmptyTopic);
  EXPECT_EQ(code({{"a"}, 1.5}), ErrorCode::StrengthOutOfRange);
  EXPECT_THROW(fluctuation_count(m, "e", 0.2), Error);
}

TEST(Uniform, ScoresAtTheirExtremes) {
  const StrengthMatrix m = uniform_matrix();
  const SlfQuery q{{"p", "q", "r"}, 0.3};
  const auto curve = safety_curve(m, q);
  const auto line = fairness_line(m, q);
  for (const auto& pt : curve) EXPECT_EQ(Rational(pt.y), line.at(pt.x));
  EXPECT_EQ(gini_unnormalized(m, q), Rational(0));
  EXPECT_EQ(gini_fairness(m, q), 0.0);
  EXPECT_NEAR(shannon_fairness(m, q), 1.0, 1e-12);
}

TEST_F(SweepChain, BinaryNotionsAtLowThreshold) {
  const SlfQuery ab{{"a", "b"}, 0.1};
  EXPECT_TRUE(is_strongly_safe(m, {{"a"}, 0.1}));
  EXPECT_FALSE(is_weakly_safe(m, {{"b"}, 0.1}));
  EXPECT_FALSE(is_lively_fair(m, ab));
  EXPECT_FALSE(is_cautiously_fair(m, ab));
  EXPECT_FALSE(is_ideally_fair(m, ab));
}

TEST_F(SweepChain, BinaryNotionsAtMiddleThreshold) {
  const SlfQuery ab{{"a", "b"}, 0.175};
  // a dips to 0.15, so no singleton is strongly safe and the two
  // implications over strongly safe singletons hold vacuously.
  EXPECT_FALSE(is_strongly_safe(m, {{"a"}, 0.175}));
  EXPECT_FALSE(is_strongly_safe(m, {{"b"}, 0.175}));
  EXPECT_TRUE(is_ideally_fair(m, ab));
  EXPECT_TRUE(is_cautiously_fair(m, ab));
  EXPECT_TRUE(is_weakly_safe(m, {{"a"}, 0.175}));
  EXPECT_FALSE(is_lively_fair(m, ab));
  EXPECT_EQ(exceed_count(m, "b", 0.175), 1);
}

TEST_F(SweepChain, GradualNotionsAtLowThreshold) {
  const SlfQuery ab{{"a", "b"}, 0.1};
  // S(b) = 1, S(a) = 3: triangles of area 1/2 on each unit interval.
  EXPECT_EQ(gini_unnormalized(m, ab), Rational(1));
  EXPECT_NEAR(gini_fairness(m, ab), 0.46212, 1e-5);
  const auto p = exceed_distribution(m, ab);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(shannon_base(*p), 4);
  const double expected = -(0.75 * std::log(0.75) + 0.25 * std::log(0.25)) / std::log(4.0);
  EXPECT_NEAR(shannon_fairness(m, ab), expected, 1e-12);
  EXPECT_NEAR(shannon_fairness(m, ab), 0.40564, 1e-5);
}

TEST(Counts, BaseOneAlongsideZeroCountsIsMaximallyUnfair) {
  const std::vector<std::int64_t> s{0, 3};
  const auto p = counts::distribution(s);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(counts::entropy_score(*p), 0.0);
  const std::vector<std::int64_t> one{4};
  EXPECT_EQ(counts::entropy_score(*counts::distribution(one)), 1.0);
}

TEST(Counts, SigmoidStaysBelowOne) {
  EXPECT_EQ(counts::sigmoid_normalize(Rational(0)), 0.0);
  EXPECT_LT(counts::sigmoid_normalize(Rational(1000)), 1.0);
  EXPECT_NEAR(counts::sigmoid_normalize(Rational(1)), 2.0 / (1.0 + std::exp(-1.0)) - 1.0, 1e-15);
}

class SlfProperties : public ::testing::Test {
 protected:
  testing::Rng rng{424242};

  template <class Fn>
  void for_random_queries(int n, Fn fn) {
    for (int iter = 0; iter < n; ++iter) {
      const Chain c = testing::random_chain(rng, testing::random_kind(rng));
      const StrengthMatrix m = evaluate_chain(c);
      const SlfQuery q{testing::random_topics(rng, common_arguments(c)),
                       testing::random_threshold(rng, m)};
      fn(m, q);
    }
  }
};

TEST_F(SlfProperties, FluctuationCountMatchesAlternatingSubsequenceOracle) {
  for_random_queries(300, [](const StrengthMatrix& m, const SlfQuery& q) {
    for (const auto& x : q.topics) {
      ASSERT_EQ(fluctuation_count(m, x, q.threshold),
                testing::fluctuation_oracle(trajectory(m, x), q.threshold));
    }
  });
}

TEST_F(SlfProperties, AreaMatchesTrapezoidOracle) {
  for_random_queries(200, [](const StrengthMatrix& m, const SlfQuery& q) {
    std::vector<std::int64_t> s;
    for (const auto& x : q.topics) s.push_back(exceed_count(m, x, q.threshold));
    if (std::accumulate(s.begin(), s.end(), std::int64_t{0}) == 0) return;
    ASSERT_NEAR(gini_unnormalized(m, q).to_double(), testing::trapezoid_area_oracle(s), 1e-6);
  });
}

TEST_F(SlfProperties, CurveNeverAboveLine) {
  for_random_queries(300, [](const StrengthMatrix& m, const SlfQuery& q) {
    const auto line = fairness_line(m, q);
    const auto curve = safety_curve(m, q);
    ASSERT_EQ(curve.front(), (CurvePoint{0, 0}));
    ASSERT_EQ(curve.back(), line.end);
    for (const auto& pt : curve) ASSERT_LE(Rational(pt.y), line.at(pt.x));
  });
}

TEST_F(SlfProperties, DistributionSumsToOne) {
  for_random_queries(300, [](const StrengthMatrix& m, const SlfQuery& q) {
    const auto p = exceed_distribution(m, q);
    if (!p) return;
    Rational total;
    for (const auto& [_, v] : *p) total += v;
    ASSERT_EQ(total, Rational(1));
    const double h = shannon_fairness(m, q);
    ASSERT_GE(h, 0.0);
    ASSERT_LE(h, 1.0 + 1e-12);
  });
}

TEST_F(SlfProperties, ScoresDependOnlyOnCountMultiset) {
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::int64_t> s(1 + rng() % 8);
    for (auto& v : s) v = static_cast<std::int64_t>(rng() % 7);
    std::vector<std::int64_t> shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(counts::area_between(s), counts::area_between(shuffled));
    const auto p1 = counts::distribution(s);
    const auto p2 = counts::distribution(shuffled);
    ASSERT_EQ(p1.has_value(), p2.has_value());
    if (p1) {
      ASSERT_NEAR(counts::entropy_score(*p1), counts::entropy_score(*p2), 1e-12);
    }
  }
}

}  // namespace
}  // namespace qbagslf
