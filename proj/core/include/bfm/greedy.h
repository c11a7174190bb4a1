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

#ifndef BFM_GREEDY_H_
#define BFM_GREEDY_H_

#include <functional>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/bid_watch.h"
#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm {

// Nested prefixes S_0 = {} , S_1, ... of the bang-per-buck order.
struct GreedyTrace {
  std::vector<AgentIndex> order;
  // prefix_values[k] = v(S_k); one longer than order.
  std::vector<Rational> prefix_values;
  // marginals[k] = v(S_{k+1}) - v(S_k) for the agent at order[k].
  std::vector<Rational> marginals;

  int size() const { return static_cast<int>(order.size()); }
  AgentSet Prefix(int k) const;
};

// Called after each step with the step index, the agent added, its marginal
// and v(S_k) including it. Returning false ends the walk.
using GreedyVisitor = std::function<bool(int step, AgentIndex agent,
                                         const Rational& marginal,
                                         const Rational& prefix_value)>;

// Orders `candidates` by decreasing m_j(S)/c_j. Zero-cost agents with
// positive marginal come first, zero-marginal agents last, ties by index.
// Ratios are compared by cross-multiplication.
GreedyTrace GreedyOrder(const Instance& instance, const AgentSet& candidates,
                        BidWatch* watch = nullptr,
                        const GreedyVisitor& visit = nullptr);
GreedyTrace GreedyOrder(const Instance& instance);

// Cuts the trace before its first zero-marginal step.
GreedyTrace ApplyZeroMarginalStop(GreedyTrace trace);

// True if agent a (marginal ma, cost ca) is placed before b.
bool GreedyPrecedes(AgentIndex a, const Rational& ma, const Rational& ca,
                    AgentIndex b, const Rational& mb, const Rational& cb);

}  // namespace bfm

#endif  // BFM_GREEDY_H_
