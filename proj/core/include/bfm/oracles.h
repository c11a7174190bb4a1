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

#ifndef BFM_ORACLES_H_
#define BFM_ORACLES_H_

#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/bid_watch.h"
#include "bfm/instance.h"
#include "bfm/rational.h"
#include "bfm/step_function.h"

namespace bfm {

struct OracleResult {
  AgentSet set;
  Rational value;
};

// Solver for max v(S) subject to c(S) <= B over a set of available agents.
// Results are memoized per (valuation, budget, available set, costs).
class BudgetOracle {
 public:
  virtual ~BudgetOracle();

  virtual std::string_view name() const = 0;
  // Claimed factor r with opt <= r * Oracle, when one is claimed.
  virtual std::optional<Rational> rating() const = 0;
  virtual bool exact() const = 0;

  OracleResult Solve(const Instance& instance, const AgentSet& available) const;
  // Over the feasible agents.
  OracleResult Solve(const Instance& instance) const;

  // The solver's value over `available` as a function of agent i's bid,
  // other bids as in `instance`. `available` must contain i.
  std::shared_ptr<const StepFunction> BidProfile(const Instance& instance,
                                                 const AgentSet& available,
                                                 AgentIndex i) const;
  // b -> max over b' >= b of BidProfile(b').
  std::shared_ptr<const StepFunction> BidMaxProfile(const Instance& instance,
                                                    const AgentSet& available,
                                                    AgentIndex i) const;

 protected:
  virtual OracleResult DoSolve(const Instance& instance,
                               const AgentSet& available) const = 0;
  virtual StepFunction DoProfile(const Instance& instance,
                                 const AgentSet& available,
                                 AgentIndex i) const = 0;

 private:
  struct Key {
    std::uint64_t valuation;
    Rational budget;
    AgentSet available;
    AgentIndex agent;
    std::vector<Rational> costs;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  static Key MakeKey(const Instance& instance, const AgentSet& available,
                     AgentIndex agent);
  static constexpr std::size_t kMaxEntries = 1 << 14;

  mutable std::mutex mu_;
  mutable std::unordered_map<Key, OracleResult, KeyHash> solved_;
  mutable std::unordered_map<Key, std::shared_ptr<const StepFunction>, KeyHash>
      profiles_;
  mutable std::unordered_map<Key, std::shared_ptr<const StepFunction>, KeyHash>
      max_profiles_;
};

// Enumerates every subset; ties go to the lexicographically smallest set.
class ExhaustiveOracle : public BudgetOracle {
 public:
  static constexpr int kDefaultLimit = 20;
  explicit ExhaustiveOracle(int limit = kDefaultLimit) : limit_(limit) {}

  std::string_view name() const override { return "exhaustive"; }
  std::optional<Rational> rating() const override { return Rational(1); }
  bool exact() const override { return true; }
  int limit() const { return limit_; }

 protected:
  OracleResult DoSolve(const Instance& instance,
                       const AgentSet& available) const override;
  StepFunction DoProfile(const Instance& instance, const AgentSet& available,
                         AgentIndex i) const override;

 private:
  void CheckSize(const Instance& instance) const;
  int limit_;
};

// Partial enumeration: every feasible seed of at most `seed_size` agents is
// completed by bang-per-buck greedy within the budget; the best completed
// set wins.
class SviridenkoOracle : public BudgetOracle {
 public:
  explicit SviridenkoOracle(int seed_size = 3);

  std::string_view name() const override { return "greedy3"; }
  // 791/500 >= e/(e-1), claimed only for seeds of size 3.
  std::optional<Rational> rating() const override;
  bool exact() const override { return false; }
  int seed_size() const { return seed_size_; }

  // Greedy completion of one seed; value 0 and an empty set when the seed
  // itself exceeds the budget.
  OracleResult Complete(const Instance& instance, const AgentSet& available,
                        const AgentSet& seed, BidWatch* watch) const;
  std::vector<AgentSet> Seeds(const AgentSet& available) const;

 protected:
  OracleResult DoSolve(const Instance& instance,
                       const AgentSet& available) const override;
  StepFunction DoProfile(const Instance& instance, const AgentSet& available,
                         AgentIndex i) const override;

 private:
  int seed_size_;
};

OracleResult ExhaustiveOpt(const Instance& instance);
OracleResult SviridenkoGreedy(const Instance& instance);

// max over c'_i >= c_i of the oracle's value on the feasible agents with i's
// cost replaced by c'_i.
Rational OracleMaxOverBids(const Instance& instance,
                           const BudgetOracle& oracle, AgentIndex i);

// max_i v({i}) / opt(A, B) over feasible agents. Throws
// kDegenerateInstance when opt is zero.
Rational LargeMarketTheta(const Instance& instance);

}  // namespace bfm

#endif  // BFM_ORACLES_H_
