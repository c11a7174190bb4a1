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

#ifndef BFM_VERIFY_H_
#define BFM_VERIFY_H_

#include <string>
#include <vector>

#include "bfm/instance.h"
#include "bfm/mechanisms.h"
#include "bfm/rational.h"
#include "bfm/valuation.h"

namespace bfm {

struct CheckResult {
  std::string name;
  bool passed = true;
  // Concrete counterexample when the check fails.
  std::string witness;
};

struct RatioResult {
  // opt / E[v(winners)]; meaningless when `infinite`.
  Rational value;
  bool infinite = false;
  Rational expected_value;
  Rational opt;
};

struct VerificationReport {
  std::string digest;
  std::string mechanism;
  std::vector<CheckResult> checks;
  RatioResult ratio;

  bool AllPassed() const;
};

// Stable 64-bit FNV-1a digest of the instance, as 16 hex digits.
std::string InstanceDigest(const Instance& instance);

// Win predicate downward closed in the agent's own bid, every branch.
CheckResult CheckMonotone(const Mechanism& mechanism, const Instance& instance);
// No deviation bid beats truthful bidding under threshold payments, every
// branch.
CheckResult CheckTruthful(const Mechanism& mechanism, const Instance& instance);
CheckResult CheckIr(const Instance& instance, const RandomizedOutcome& paid);
CheckResult CheckBudgetFeasible(const Instance& instance,
                                const RandomizedOutcome& paid);
RatioResult EmpiricalRatio(const Instance& instance,
                           const RandomizedOutcome& outcome);
RatioResult EmpiricalRatio(const Mechanism& mechanism,
                           const Instance& instance);
// Monotonicity and the submodular inequality over all pairs of subsets.
// Throws kSizeLimit above 6 agents.
CheckResult CheckSubmodular(const Valuation& valuation);
// Every branch's winners admit a maximum-weight matching covering them all.
// Requires a task-valued matching valuation.
CheckResult CheckAssignment(const Mechanism& mechanism,
                            const Instance& instance);

// Runs every applicable check and the ratio. `paid`, when given, receives
// the outcome with payments.
VerificationReport Verify(const Mechanism& mechanism, const Instance& instance,
                          RandomizedOutcome* paid = nullptr);

}  // namespace bfm

#endif  // BFM_VERIFY_H_
