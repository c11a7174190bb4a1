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

#include "bfm/payments.h"

#include <gtest/gtest.h>

#include "bfm/error.h"
#include "bfm/greedy.h"
#include "support/fixtures.h"
#include "support/reference.h"

namespace bfm {
namespace {

MechanismSpec Spec(MechanismKind kind, Rational gamma, Rational alpha,
                   OracleKind oracle = OracleKind::kExhaustive) {
  MechanismSpec s;
  s.kind = kind;
  s.gamma = gamma;
  s.alpha = alpha;
  s.oracle = oracle;
  return s;
}

const Rational kHalf(1, 2);

TEST(ThresholdTest, GreedyTmOnE1) {
  GreedyTmRule tm(kHalf, false);
  ThresholdResult t = ThresholdPayment(tm, fixtures::E1(), 0);
  EXPECT_EQ(t.value, Rational(1));
  EXPECT_TRUE(t.attained);
  EXPECT_GT(t.runs, 0);
  RandomizedOutcome out =
      PaymentsForOutcome(Mechanism(Spec(MechanismKind::kGreedyTm, kHalf, 1)),
                         fixtures::E1());
  ASSERT_EQ(out.branches.size(), 1u);
  EXPECT_EQ(out.branches[0].outcome.payments,
            (std::vector<Rational>{1, 0, 0, 0}));
  EXPECT_EQ(out.branches[0].outcome.TotalPayment(), Rational(1));
}

TEST(ThresholdTest, BestSinglePaysBudget) {
  BestSingleRule best;
  EXPECT_EQ(WinnerPayment(best, fixtures::E1(), 0), Rational(2));
  EXPECT_EQ(WinnerPayment(best, fixtures::E2(), 0), Rational(4));
}

TEST(ThresholdTest, DeterministicEomSinglePaysBudget) {
  Mechanism m(Spec(MechanismKind::kDetEom, 1, 1));
  RandomizedOutcome out = PaymentsForOutcome(m, fixtures::E5());
  EXPECT_EQ(out.branches[0].outcome.winners, AgentSet{0});
  EXPECT_EQ(out.branches[0].outcome.payments[0], Rational(2));
}

TEST(ThresholdTest, DetLargePaysMinimumOfComponents) {
  const Instance e1 = fixtures::E1();
  Mechanism m(Spec(MechanismKind::kDetLarge, kHalf, kHalf));
  RandomizedOutcome out = PaymentsForOutcome(m, e1);
  ASSERT_EQ(out.branches[0].outcome.winners, AgentSet{0});
  GreedyTmRule tm(kHalf, false);
  GreedyOmRule om(kHalf, m.oracle(), false, false);
  const Rational want = Min(ThresholdPayment(tm, e1, 0).value,
                            ThresholdPayment(om, e1, 0).value);
  EXPECT_EQ(out.branches[0].outcome.payments[0], want);
}

TEST(ThresholdTest, EmptyWinnersPayNothing) {
  Mechanism m(Spec(MechanismKind::kGreedyEom, 1, kHalf));
  RandomizedOutcome out = PaymentsForOutcome(m, fixtures::Skewed());
  EXPECT_TRUE(out.branches[0].outcome.winners.Empty());
  EXPECT_EQ(out.branches[0].outcome.TotalPayment(), Rational(0));
}

TEST(ThresholdTest, LoserIsRejected) {
  GreedyTmRule tm(kHalf, false);
  try {
    ThresholdPayment(tm, fixtures::E1(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(BisectionTest, AgreesOnE1) {
  GreedyTmRule tm(kHalf, false);
  const Rational tol(1, std::int64_t{1} << 30);
  Rational b = BisectionThreshold(tm, fixtures::E1(), 0, tol);
  EXPECT_LE(Abs(b - 1), tol);
  BestSingleRule best;
  EXPECT_LE(Abs(BisectionThreshold(best, fixtures::E1(), 0, tol) - 2), tol);
  EXPECT_THROW(BisectionThreshold(tm, fixtures::E1(), 0, 0), Error);
}

// Wins only below 1 or above 3: not monotone.
class Gappy : public AllocationRule {
 public:
  std::string name() const override { return "gappy"; }
  AgentSet Run(const Instance& inst) const override {
    return Wins(inst, 0, nullptr) ? AgentSet{0} : AgentSet{};
  }
  bool Wins(const Instance& inst, AgentIndex i, BidWatch*) const override {
    return i == 0 && (inst.cost(0) < 1 || inst.cost(0) > 3);
  }
};

TEST(BisectionTest, ReportsNonMonotonePredicate) {
  Instance inst = fixtures::Additive({1}, {Rational(1, 2)}, 4);
  try {
    BisectionThreshold(Gappy(), inst, 0, Rational(1, 1024));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMonotonicityViolation);
  }
}

class PaymentPropertyTest : public ::testing::TestWithParam<std::string> {
 protected:
  std::vector<Instance> Instances(int count, int n_max, std::uint64_t seed) {
    return fixtures::RandomInstances(GetParam(), count, n_max, seed);
  }
};

TEST_P(PaymentPropertyTest, SweepMatchesReferenceBisection) {
  const Rational tol(1, 1 << 20);
  const mpq_class qtol = ref::Q(tol);
  for (const Instance& inst : Instances(20, 6, 131)) {
    ref::Problem p = ref::FromInstance(inst);
    GreedyTmRule tm(kHalf, false);
    GreedyEomRule eom(kHalf, MakeOracle(OracleKind::kExhaustive), false);
    auto tm_ref = [](const ref::Problem& q) {
      return ref::GreedyTm(q, mpq_class(1, 2));
    };
    auto eom_ref = [](const ref::Problem& q) {
      return ref::GreedyEom(q, mpq_class(1, 2));
    };
    tm.Run(inst).ForEach([&](AgentIndex i) {
      mpq_class want = ref::BisectThreshold(p, i, tm_ref, qtol);
      mpq_class got = ref::Q(WinnerPayment(tm, inst, i));
      ASSERT_LE(abs(got - want), qtol) << "tm agent " << i + 1;
    });
    eom.Run(inst).ForEach([&](AgentIndex i) {
      mpq_class want = ref::BisectThreshold(p, i, eom_ref, qtol);
      mpq_class got = ref::Q(WinnerPayment(eom, inst, i));
      ASSERT_LE(abs(got - want), qtol) << "eom agent " << i + 1;
    });
  }
}

TEST_P(PaymentPropertyTest, SweepMatchesLibraryBisection) {
  const Rational tol(1, 1 << 20);
  std::vector<MechanismSpec> specs = corpus::Mechanisms();
  for (const Instance& inst : Instances(6, 6, 137)) {
    for (const MechanismSpec& s : specs) {
      Mechanism m(s);
      for (const MechanismBranch& b : m.branches()) {
        if (!b.rule->ThresholdComponents().empty()) continue;
        b.rule->Run(inst).ForEach([&](AgentIndex i) {
          const Rational sweep = WinnerPayment(*b.rule, inst, i);
          ASSERT_LE(Abs(sweep - BisectionThreshold(*b.rule, inst, i, tol)), tol)
              << s.ToString() << " agent " << i + 1;
        });
      }
    }
  }
}

TEST_P(PaymentPropertyTest, IndividuallyRationalAndBounded) {
  std::vector<MechanismSpec> specs = corpus::Mechanisms();
  for (const Instance& inst : Instances(10, 7, 139)) {
    for (const MechanismSpec& s : specs) {
      RandomizedOutcome out = PaymentsForOutcome(Mechanism(s), inst);
      for (const OutcomeBranch& b : out.branches) {
        for (AgentIndex i = 0; i < inst.n(); ++i) {
          const Rational& pay = b.outcome.payments[i];
          if (b.outcome.winners.Contains(i)) {
            ASSERT_GE(pay, inst.cost(i)) << s.ToString();
            ASSERT_LE(pay, inst.budget()) << s.ToString();
          } else {
            ASSERT_EQ(pay, Rational(0));
          }
        }
      }
    }
  }
}

TEST_P(PaymentPropertyTest, TmHalfPerWinnerBound) {
  GreedyTmRule tm(kHalf, false);
  for (const Instance& inst : Instances(60, 7, 149)) {
    const AgentSet winners = tm.Run(inst);
    const Rational vs = inst.Value(winners);
    if (vs.sign() == 0) continue;
    GreedyTrace t = GreedyOrder(inst, FeasibleFilter(inst));
    Rational total;
    for (int k = 0; k < t.size(); ++k) {
      const AgentIndex i = t.order[k];
      if (!winners.Contains(i)) continue;
      const Rational pay = WinnerPayment(tm, inst, i);
      total += pay;
      ASSERT_LE(pay, t.marginals[k] * inst.budget() / vs) << "agent " << i + 1;
    }
    ASSERT_LE(total, inst.budget());
  }
}

TEST_P(PaymentPropertyTest, GreedyTmHalfIsBudgetFeasible) {
  Mechanism m(Spec(MechanismKind::kGreedyTm, kHalf, 1));
  for (const Instance& inst : Instances(60, 8, 151)) {
    RandomizedOutcome out = PaymentsForOutcome(m, inst);
    ASSERT_LE(out.branches[0].outcome.TotalPayment(), inst.budget());
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, PaymentPropertyTest,
                         ::testing::Values("additive", "coverage", "matching",
                                           "task_matching"));

}  // namespace
}  // namespace bfm
