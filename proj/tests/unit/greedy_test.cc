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

#include "bfm/greedy.h"

#include <gtest/gtest.h>

#include "support/fixtures.h"
#include "support/reference.h"

namespace bfm {
namespace {

std::vector<AgentIndex> Order(const GreedyTrace& t) { return t.order; }

TEST(GreedyOrderTest, EqualRatiosBreakTiesBySmallestId) {
  GreedyTrace t = GreedyOrder(fixtures::E1());
  EXPECT_EQ(Order(t), (std::vector<AgentIndex>{0, 1, 2, 3}));
  EXPECT_EQ(t.marginals, (std::vector<Rational>{3, 3, 3, 3}));
  EXPECT_EQ(t.prefix_values, (std::vector<Rational>{0, 3, 6, 9, 12}));
}

TEST(GreedyOrderTest, FreeAgentComesFirst) {
  GreedyTrace t = GreedyOrder(fixtures::E2());
  EXPECT_EQ(Order(t), (std::vector<AgentIndex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(t.marginals[0], Rational(1));
}

TEST(GreedyOrderTest, CoverageEndsWithZeroMarginal) {
  GreedyTrace t = GreedyOrder(fixtures::E3());
  EXPECT_EQ(Order(t), (std::vector<AgentIndex>{0, 1, 2}));
  EXPECT_EQ(t.marginals, (std::vector<Rational>{2, 1, 0}));
}

TEST(GreedyOrderTest, ZeroMarginalGoesLastEvenWhenFree) {
  // a1 worthless and free, a2 valuable and expensive.
  Instance inst = fixtures::Additive({0, 5}, {0, 9}, 10);
  EXPECT_EQ(Order(GreedyOrder(inst)), (std::vector<AgentIndex>{1, 0}));
}

TEST(GreedyOrderTest, FreeAgentsTieById) {
  Instance inst = fixtures::Additive({1, 5, 2}, {0, 1, 0}, 10);
  EXPECT_EQ(Order(GreedyOrder(inst)), (std::vector<AgentIndex>{0, 2, 1}));
}

TEST(GreedyOrderTest, VisitorCanStopEarly) {
  int seen = 0;
  GreedyTrace t = GreedyOrder(
      fixtures::E1(), fixtures::E1().agents(), nullptr,
      [&](int, AgentIndex, const Rational&, const Rational&) {
        return ++seen < 2;
      });
  EXPECT_EQ(seen, 2);
  EXPECT_EQ(t.size(), 2);
}

TEST(ZeroMarginalStopTest, CutsBeforeFirstZero) {
  GreedyTrace t = ApplyZeroMarginalStop(GreedyOrder(fixtures::E3()));
  EXPECT_EQ(Order(t), (std::vector<AgentIndex>{0, 1}));
  EXPECT_EQ(t.prefix_values.size(), 3u);
}

TEST(ZeroMarginalStopTest, PositiveTraceUnchanged) {
  GreedyTrace t = GreedyOrder(fixtures::E1());
  EXPECT_EQ(Order(ApplyZeroMarginalStop(t)), Order(t));
}

TEST(ZeroMarginalStopTest, AllZeroValuationGivesEmptyTrace) {
  Instance inst = fixtures::Additive({0, 0, 0}, {1, 1, 1}, 3);
  EXPECT_EQ(ApplyZeroMarginalStop(GreedyOrder(inst)).size(), 0);
}

TEST(GreedyPrecedesTest, CrossMultipliedRatios) {
  EXPECT_TRUE(GreedyPrecedes(1, 3, 2, 0, 1, 1));   // 3/2 > 1/1
  EXPECT_TRUE(GreedyPrecedes(0, 2, 2, 1, 1, 1));   // tie, smaller id
  EXPECT_FALSE(GreedyPrecedes(1, 2, 2, 0, 1, 1));  // tie, larger id
  EXPECT_TRUE(GreedyPrecedes(5, 1, 0, 0, 100, 1)); // free beats any ratio
  EXPECT_TRUE(GreedyPrecedes(5, 1, 100, 0, 0, 0)); // anything beats m = 0
}

class GreedyPropertyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(GreedyPropertyTest, MatchesReferenceOrder) {
  for (const Instance& inst :
       fixtures::RandomInstances(GetParam(), 150, 8, 51)) {
    GreedyTrace t = GreedyOrder(inst);
    ref::Trace r = ref::Greedy(ref::FromInstance(inst),
                               ref::ToMask(inst.agents()));
    ASSERT_EQ(t.order, r.order);
    for (std::size_t k = 0; k < r.marginals.size(); ++k) {
      ASSERT_EQ(ref::Q(t.marginals[k]), r.marginals[k]);
    }
  }
}

TEST_P(GreedyPropertyTest, PrefixValuesTelescope) {
  for (const Instance& inst :
       fixtures::RandomInstances(GetParam(), 150, 8, 53)) {
    GreedyTrace t = GreedyOrder(inst);
    ASSERT_EQ(t.prefix_values.size(), t.order.size() + 1);
    Rational sum = t.prefix_values[0];
    for (int k = 0; k < t.size(); ++k) {
      ASSERT_GE(t.marginals[k].sign(), 0);
      sum += t.marginals[k];
      ASSERT_EQ(sum, t.prefix_values[k + 1]);
      ASSERT_EQ(inst.Value(t.Prefix(k + 1)), t.prefix_values[k + 1]);
    }
  }
}

TEST_P(GreedyPropertyTest, ScalingCostsKeepsOrder) {
  const Rational lambdas[] = {Rational(1, 3), Rational(7, 2), Rational(1000)};
  for (const Instance& inst :
       fixtures::RandomInstances(GetParam(), 80, 8, 57)) {
    const auto base = GreedyOrder(inst).order;
    for (const Rational& l : lambdas) {
      std::vector<Rational> costs;
      for (const Rational& c : inst.costs()) costs.push_back(c * l);
      Instance scaled(costs, inst.budget() * l, inst.valuation_ptr());
      ASSERT_EQ(GreedyOrder(scaled).order, base);
    }
  }
}

TEST_P(GreedyPropertyTest, PureFunction) {
  for (const Instance& inst :
       fixtures::RandomInstances(GetParam(), 30, 8, 59)) {
    ASSERT_EQ(GreedyOrder(inst).order, GreedyOrder(inst).order);
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, GreedyPropertyTest,
                         ::testing::Values("additive", "coverage", "matching",
                                           "task_matching"));

}  // namespace
}  // namespace bfm
