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

#ifndef BFM_INSTANCE_H_
#define BFM_INSTANCE_H_

#include <memory>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/bid_watch.h"
#include "bfm/rational.h"
#include "bfm/valuation.h"

namespace bfm {

// Agents with declared costs, a budget and the buyer's valuation.
class Instance {
 public:
  Instance(std::vector<Rational> costs, Rational budget,
           std::shared_ptr<const Valuation> valuation);

  int n() const { return static_cast<int>(costs_.size()); }
  const Rational& cost(AgentIndex i) const { return costs_[i]; }
  const std::vector<Rational>& costs() const { return costs_; }
  const Rational& budget() const { return budget_; }
  const Valuation& valuation() const { return *valuation_; }
  const std::shared_ptr<const Valuation>& valuation_ptr() const {
    return valuation_;
  }
  AgentSet agents() const { return AgentSet::Range(n()); }

  Rational Value(const AgentSet& s) const { return valuation_->Value(s); }
  Rational Cost(const AgentSet& s) const;

  // Same instance with agent i bidding b.
  Instance WithCost(AgentIndex i, const Rational& b) const;

 private:
  std::vector<Rational> costs_;
  Rational budget_;
  std::shared_ptr<const Valuation> valuation_;
};

// {i : c_i <= B}.
AgentSet FeasibleFilter(const Instance& instance, BidWatch* watch = nullptr);

// Feasible agent of largest individual value, smallest index on ties.
// Throws kEmptyInstance when no agent is feasible.
AgentIndex BestSingle(const Instance& instance);
AgentIndex BestSingle(const Instance& instance, const AgentSet& candidates);

Rational Marginal(const Instance& instance, const AgentSet& s, AgentIndex i);

}  // namespace bfm

#endif  // BFM_INSTANCE_H_
