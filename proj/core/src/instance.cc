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

#include "bfm/instance.h"

#include <string>

#include "bfm/error.h"

namespace bfm {

Instance::Instance(std::vector<Rational> costs, Rational budget,
                   std::shared_ptr<const Valuation> valuation)
    : costs_(std::move(costs)),
      budget_(std::move(budget)),
      valuation_(std::move(valuation)) {
  if (valuation_ == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "missing valuation");
  }
  if (valuation_->num_agents() != n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "valuation covers " + std::to_string(valuation_->num_agents()) +
                    " agents, instance has " + std::to_string(n()));
  }
  if (budget_.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
  }
  for (int i = 0; i < n(); ++i) {
    if (costs_[i].sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cost of agent " + std::to_string(i + 1) + " is negative");
    }
  }
}

Rational Instance::Cost(const AgentSet& s) const {
  Rational total;
  s.ForEach([&](AgentIndex a) { total += costs_[a]; });
  return total;
}

Instance Instance::WithCost(AgentIndex i, const Rational& b) const {
  if (i < 0 || i >= n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown agent id " + std::to_string(i + 1));
  }
  if (b.sign() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bids must be non-negative");
  }
  Instance copy = *this;
  copy.costs_[i] = b;
  return copy;
}

AgentSet FeasibleFilter(const Instance& instance, BidWatch* watch) {
  AgentSet out;
  for (int i = 0; i < instance.n(); ++i) {
    if (Watching(watch, i)) watch->Note(instance.budget());
    if (instance.cost(i) <= instance.budget()) out.Insert(i);
  }
  return out;
}

AgentIndex BestSingle(const Instance& instance, const AgentSet& candidates) {
  AgentIndex best = -1;
  Rational best_value;
  candidates.ForEach([&](AgentIndex a) {
    Rational v = instance.Value(AgentSet{a});
    if (best < 0 || v > best_value) {
      best = a;
      best_value = v;
    }
  });
  if (best < 0) {
    throw Error(ErrorCode::kEmptyInstance, "no agent bids within the budget");
  }
  return best;
}

AgentIndex BestSingle(const Instance& instance) {
  return BestSingle(instance, FeasibleFilter(instance));
}

Rational Marginal(const Instance& instance, const AgentSet& s, AgentIndex i) {
  return instance.valuation().Marginal(s, i);
}

}  // namespace bfm
