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

#ifndef BFM_MECHANISMS_H_
#define BFM_MECHANISMS_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/bid_watch.h"
#include "bfm/instance.h"
#include "bfm/oracles.h"
#include "bfm/rational.h"

namespace bfm {

enum class MechanismKind {
  kGreedyTm,
  kRandomTm,
  kGreedyEom,
  kRandomEom,
  kDetEom,
  kGreedyOm,
  kRandomOm,
  kRandomOmModified,
  kDetLarge,
};

enum class OracleKind { kExhaustive, kGreedy3 };

std::string_view KindName(MechanismKind kind);
MechanismKind ParseKind(std::string_view name);
std::string_view OracleName(OracleKind kind);
OracleKind ParseOracle(std::string_view name);

struct MechanismSpec {
  MechanismKind kind = MechanismKind::kGreedyTm;
  Rational gamma = Rational(1, 2);
  Rational alpha = Rational(1, 2);
  OracleKind oracle = OracleKind::kExhaustive;
  // Overrides the oracle's own rating in the random_om mixture.
  std::optional<Rational> rating;
  bool matching_stop = false;
  int seed_size = 3;

  bool UsesGamma() const;
  bool UsesAlpha() const;
  bool UsesOracle() const;
  // e.g. "greedy_om(alpha=1/2,oracle=exhaustive)".
  std::string ToString() const;
};

// Deterministic allocation rule. Wins() decides a single agent's outcome,
// reporting every comparison against that agent's bid to the watch.
class AllocationRule {
 public:
  virtual ~AllocationRule();
  virtual std::string name() const = 0;
  virtual AgentSet Run(const Instance& instance) const = 0;
  virtual bool Wins(const Instance& instance, AgentIndex i,
                    BidWatch* watch) const = 0;
  // Rules whose payment is the minimum of several thresholds list them
  // here; empty means the rule's own threshold.
  virtual std::vector<std::shared_ptr<const AllocationRule>>
  ThresholdComponents() const {
    return {};
  }
};

// Greedy prefix admitted while c_k v(S_k) <= gamma B m_k.
class GreedyTmRule : public AllocationRule {
 public:
  GreedyTmRule(Rational gamma, bool matching_stop);
  std::string name() const override;
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;

 private:
  AgentSet Walk(const Instance& instance, AgentIndex target,
                BidWatch* watch) const;
  Rational gamma_;
  bool matching_stop_;
};

// Greedy prefix admitted while v(S_k) <= alpha opt(A, B).
class GreedyEomRule : public AllocationRule {
 public:
  GreedyEomRule(Rational alpha, std::shared_ptr<const BudgetOracle> optimum,
                bool matching_stop);
  std::string name() const override;
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;

 private:
  AgentSet Walk(const Instance& instance, AgentIndex target,
                BidWatch* watch) const;
  Rational alpha_;
  std::shared_ptr<const BudgetOracle> optimum_;
  bool matching_stop_;
};

// Position k of the full trace is admitted iff v(S_k) <= alpha times the
// oracle's value on A \ {k}, or, in the modified form, the oracle's value
// maximized over bids of k at or above its own.
class GreedyOmRule : public AllocationRule {
 public:
  GreedyOmRule(Rational alpha, std::shared_ptr<const BudgetOracle> oracle,
               bool matching_stop, bool modified);
  std::string name() const override;
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;

 private:
  Rational Bound(const Instance& instance, const AgentSet& feasible,
                 AgentIndex a) const;
  Rational alpha_;
  std::shared_ptr<const BudgetOracle> oracle_;
  bool matching_stop_;
  bool modified_;
};

// The feasible agent of largest individual value.
class BestSingleRule : public AllocationRule {
 public:
  std::string name() const override { return "best_single"; }
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;
};

// {i*} when v(i*) >= (sqrt(17) - 3)/4 opt(A \ {i*}), else greedy EOM(1/2).
class DeterministicEomRule : public AllocationRule {
 public:
  DeterministicEomRule(std::shared_ptr<const BudgetOracle> optimum,
                       bool matching_stop);
  std::string name() const override { return "det_eom"; }
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;

  // (4 a + 3 v)^2 >= 17 v^2 for a, v >= 0.
  static bool PrefersSingle(const Rational& single, const Rational& rest);

 private:
  std::shared_ptr<const BudgetOracle> optimum_;
  GreedyEomRule eom_;
};

// Intersection of a Greedy-TM and a Greedy-OM outcome.
class DeterministicLargeRule : public AllocationRule {
 public:
  DeterministicLargeRule(std::shared_ptr<const GreedyTmRule> tm,
                         std::shared_ptr<const GreedyOmRule> om);
  std::string name() const override;
  AgentSet Run(const Instance& instance) const override;
  bool Wins(const Instance& instance, AgentIndex i,
            BidWatch* watch) const override;
  std::vector<std::shared_ptr<const AllocationRule>> ThresholdComponents()
      const override;

 private:
  std::shared_ptr<const GreedyTmRule> tm_;
  std::shared_ptr<const GreedyOmRule> om_;
};

struct DeterministicOutcome {
  AgentSet winners;
  // Indexed by agent; zero for losers.
  std::vector<Rational> payments;

  Rational TotalPayment() const;
};

struct OutcomeBranch {
  Rational probability;
  std::string label;
  DeterministicOutcome outcome;
};

struct RandomizedOutcome {
  std::vector<OutcomeBranch> branches;
};

struct MechanismBranch {
  Rational probability;
  std::shared_ptr<const AllocationRule> rule;
};

// A finite mixture of deterministic rules built from a spec.
class Mechanism {
 public:
  // Throws kInvalidArgument on parameters outside the supported ranges.
  explicit Mechanism(const MechanismSpec& spec);
  // Arbitrary mixture, for tests and custom experiments.
  Mechanism(MechanismSpec spec, std::vector<MechanismBranch> branches);

  const MechanismSpec& spec() const { return spec_; }
  const std::vector<MechanismBranch>& branches() const { return branches_; }
  const std::shared_ptr<const BudgetOracle>& oracle() const { return oracle_; }

  // Winners per branch, payments left at zero.
  RandomizedOutcome Allocate(const Instance& instance) const;

 private:
  MechanismSpec spec_;
  std::shared_ptr<const BudgetOracle> oracle_;
  std::vector<MechanismBranch> branches_;
};

std::shared_ptr<const BudgetOracle> MakeOracle(OracleKind kind,
                                               int seed_size = 3);

// Single-call forms of the deterministic rules.
AgentSet GreedyTm(const Instance& instance, const Rational& gamma,
                  bool matching_stop = false);
// `optimum` must be exact.
AgentSet GreedyEom(const Instance& instance, const Rational& alpha,
                   std::shared_ptr<const BudgetOracle> optimum,
                   bool matching_stop = false);
AgentSet DeterministicEom(const Instance& instance, bool matching_stop = false);
AgentSet GreedyOm(const Instance& instance, const Rational& alpha,
                  std::shared_ptr<const BudgetOracle> oracle,
                  bool matching_stop = false);
AgentSet DeterministicLarge(const Instance& instance, const Rational& alpha,
                            const Rational& gamma,
                            std::shared_ptr<const BudgetOracle> oracle,
                            bool matching_stop = false);

}  // namespace bfm

#endif  // BFM_MECHANISMS_H_
