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

#ifndef BFM_PAYMENTS_H_
#define BFM_PAYMENTS_H_

#include "bfm/agent_set.h"
#include "bfm/instance.h"
#include "bfm/mechanisms.h"
#include "bfm/rational.h"
#include "bfm/sweep.h"

namespace bfm {

struct ThresholdResult {
  // Boundary between the winning bids reached from the start and the first
  // losing bid above them.
  Rational value;
  // Whether the agent still wins when bidding exactly `value`.
  bool attained = false;
  // Rule evaluations spent by the sweep.
  int runs = 0;
};

// Win predicate of agent i as a function of its own bid.
SweepResult<bool> WinSweep(const AllocationRule& rule, const Instance& instance,
                           AgentIndex i, const Rational& from,
                           bool stop_at_first_loss);

// Threshold reached by sweeping upward from `from`, at which i must win.
// Throws kInvalidArgument if i loses at `from`.
ThresholdResult ThresholdFrom(const AllocationRule& rule,
                              const Instance& instance, AgentIndex i,
                              const Rational& from);
// Threshold of a winner at its declared cost.
ThresholdResult ThresholdPayment(const AllocationRule& rule,
                                 const Instance& instance, AgentIndex i);
// Payment of a winner: its threshold, or the least threshold over the
// rule's components when it has them.
Rational WinnerPayment(const AllocationRule& rule, const Instance& instance,
                       AgentIndex i);
Rational WinnerPaymentFrom(const AllocationRule& rule,
                           const Instance& instance, AgentIndex i,
                           const Rational& from);

// Allocation with threshold payments in every branch.
RandomizedOutcome PaymentsForOutcome(const Mechanism& mechanism,
                                     const Instance& instance);

// Bisection of the win predicate over [c_i, B + 1] down to `tolerance`.
// Throws kMonotonicityViolation if a lose-then-win pattern is observed.
Rational BisectionThreshold(const AllocationRule& rule,
                            const Instance& instance, AgentIndex i,
                            const Rational& tolerance);

}  // namespace bfm

#endif  // BFM_PAYMENTS_H_
