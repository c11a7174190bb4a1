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

#include <string>

#include "bfm/error.h"

namespace bfm {

SweepResult<bool> WinSweep(const AllocationRule& rule, const Instance& instance,
                           AgentIndex i, const Rational& from,
                           bool stop_at_first_loss) {
  std::function<bool(const SweepPiece<bool>&)> stop;
  if (stop_at_first_loss) {
    stop = [](const SweepPiece<bool>& p) { return !p.value; };
  }
  return Sweep<bool>(
      i, from,
      [&](const Rational& b, BidWatch& watch) {
        return rule.Wins(instance.WithCost(i, b), i, &watch);
      },
      stop);
}

ThresholdResult ThresholdFrom(const AllocationRule& rule,
                              const Instance& instance, AgentIndex i,
                              const Rational& from) {
  SweepResult<bool> sweep = WinSweep(rule, instance, i, from, true);
  const SweepPiece<bool>& last = sweep.pieces.back();
  if (sweep.pieces.size() == 1 && !last.value) {
    throw Error(ErrorCode::kInvalidArgument,
                "agent " + std::to_string(i + 1) + " does not win at bid " +
                    from.ToString());
  }
  if (last.value) {
    throw Error(ErrorCode::kInternal,
                "agent " + std::to_string(i + 1) + " wins at every bid");
  }
  // A losing point follows a winning interval; a losing interval follows a
  // winning point.
  return {last.lo, !last.point, sweep.runs};
}

ThresholdResult ThresholdPayment(const AllocationRule& rule,
                                 const Instance& instance, AgentIndex i) {
  return ThresholdFrom(rule, instance, i, instance.cost(i));
}

Rational WinnerPaymentFrom(const AllocationRule& rule,
                           const Instance& instance, AgentIndex i,
                           const Rational& from) {
  auto components = rule.ThresholdComponents();
  if (components.empty()) return ThresholdFrom(rule, instance, i, from).value;
  std::optional<Rational> best;
  for (const auto& c : components) {
    Rational t = ThresholdFrom(*c, instance, i, from).value;
    if (!best || t < *best) best = t;
  }
  return *best;
}

Rational WinnerPayment(const AllocationRule& rule, const Instance& instance,
                       AgentIndex i) {
  return WinnerPaymentFrom(rule, instance, i, instance.cost(i));
}

RandomizedOutcome PaymentsForOutcome(const Mechanism& mechanism,
                                     const Instance& instance) {
  RandomizedOutcome out = mechanism.Allocate(instance);
  for (std::size_t b = 0; b < out.branches.size(); ++b) {
    const AllocationRule& rule = *mechanism.branches()[b].rule;
    DeterministicOutcome& d = out.branches[b].outcome;
    d.winners.ForEach([&](AgentIndex i) {
      d.payments[i] = WinnerPayment(rule, instance, i);
    });
  }
  return out;
}

Rational BisectionThreshold(const AllocationRule& rule,
                            const Instance& instance, AgentIndex i,
                            const Rational& tolerance) {
  if (tolerance.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  auto wins = [&](const Rational& b) {
    return rule.Wins(instance.WithCost(i, b), i, nullptr);
  };
  Rational lo = instance.cost(i);
  Rational hi = instance.budget() + 1;
  if (!wins(lo)) {
    throw Error(ErrorCode::kInvalidArgument,
                "agent " + std::to_string(i + 1) + " does not win");
  }
  if (hi <= lo) return lo;
  // Coarse grid to catch a predicate that wins again after losing.
  constexpr int kGrid = 16;
  std::optional<Rational> lost_at;
  for (int k = 1; k <= kGrid; ++k) {
    Rational b = lo + (hi - lo) * Rational(k, kGrid);
    bool w = wins(b);
    if (!w && !lost_at) lost_at = b;
    if (w && lost_at) {
      throw Error(ErrorCode::kMonotonicityViolation,
                  "agent " + std::to_string(i + 1) + " loses at bid " +
                      lost_at->ToString() + " but wins at bid " +
                      b.ToString());
    }
  }
  while (hi - lo > tolerance) {
    Rational mid = (lo + hi) / 2;
    if (wins(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace bfm
