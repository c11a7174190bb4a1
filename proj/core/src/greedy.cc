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

namespace bfm {
namespace {

// 0: positive marginal at zero cost, 1: ordinary, 2: zero marginal.
int KeyClass(const Rational& m, const Rational& c) {
  if (m.sign() <= 0) return 2;
  return c.sign() == 0 ? 0 : 1;
}

}  // namespace

AgentSet GreedyTrace::Prefix(int k) const {
  AgentSet s;
  for (int j = 0; j < k; ++j) s.Insert(order[j]);
  return s;
}

bool GreedyPrecedes(AgentIndex a, const Rational& ma, const Rational& ca,
                    AgentIndex b, const Rational& mb, const Rational& cb) {
  int ka = KeyClass(ma, ca);
  int kb = KeyClass(mb, cb);
  if (ka != kb) return ka < kb;
  if (ka == 1) {
    Rational lhs = ma * cb;
    Rational rhs = mb * ca;
    if (lhs != rhs) return lhs > rhs;
  }
  return a < b;
}

GreedyTrace GreedyOrder(const Instance& instance, const AgentSet& candidates,
                        BidWatch* watch, const GreedyVisitor& visit) {
  GreedyTrace trace;
  AgentSet chosen;
  Rational current = instance.Value(chosen);
  trace.prefix_values.push_back(current);
  std::vector<AgentIndex> remaining = candidates.Members();
  std::vector<Rational> marginal(remaining.size());
  const AgentIndex watched = watch != nullptr ? watch->agent : -1;

  while (!remaining.empty()) {
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      marginal[j] = instance.Value(chosen.With(remaining[j])) - current;
    }
    // Best among everyone except the watched agent, then the watched agent
    // against that best, so the comparison's root can be reported.
    int best = -1;
    int self = -1;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      AgentIndex a = remaining[j];
      if (a == watched) {
        self = static_cast<int>(j);
        continue;
      }
      if (best < 0 ||
          GreedyPrecedes(a, marginal[j], instance.cost(a), remaining[best],
                         marginal[best], instance.cost(remaining[best]))) {
        best = static_cast<int>(j);
      }
    }
    if (self >= 0) {
      const Rational& mi = marginal[self];
      if (best >= 0) {
        const Rational& mw = marginal[best];
        const Rational& cw = instance.cost(remaining[best]);
        if (mi.sign() > 0 && mw.sign() > 0 && cw.sign() > 0) {
          watch->Note(cw * mi / mw);
        }
      }
      if (best < 0 ||
          GreedyPrecedes(watched, mi, instance.cost(watched), remaining[best],
                         marginal[best], instance.cost(remaining[best]))) {
        best = self;
      }
    }

    AgentIndex a = remaining[best];
    Rational m = marginal[best];
    chosen.Insert(a);
    current += m;
    trace.order.push_back(a);
    trace.marginals.push_back(m);
    trace.prefix_values.push_back(current);
    remaining.erase(remaining.begin() + best);
    marginal.erase(marginal.begin() + best);
    if (visit && !visit(trace.size() - 1, a, m, current)) break;
  }
  return trace;
}

GreedyTrace GreedyOrder(const Instance& instance) {
  return GreedyOrder(instance, instance.agents());
}

GreedyTrace ApplyZeroMarginalStop(GreedyTrace trace) {
  for (int k = 0; k < trace.size(); ++k) {
    if (trace.marginals[k].sign() == 0) {
      trace.order.resize(k);
      trace.marginals.resize(k);
      trace.prefix_values.resize(k + 1);
      break;
    }
  }
  return trace;
}

}  // namespace bfm
