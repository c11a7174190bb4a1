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

#include "bfm/verify.h"

#include <cstdio>
#include <utility>

#include "bfm/error.h"
#include "bfm/oracles.h"
#include "bfm/payments.h"
#include "bfm/sweep.h"
#include "bfm/valuations.h"

namespace bfm {
namespace {

using Pieces = std::vector<SweepPiece<bool>>;

std::string Agent(AgentIndex i) { return "agent " + std::to_string(i + 1); }

std::string BranchLabel(const Mechanism& m, std::size_t b) {
  return "branch " + std::to_string(b) + " (" + m.branches()[b].rule->name() +
         ")";
}

// Win predicate of every agent in every branch, swept over all bids >= 0.
std::vector<std::vector<Pieces>> SweepAll(const Mechanism& mechanism,
                                          const Instance& instance) {
  std::vector<std::vector<Pieces>> out;
  for (const MechanismBranch& branch : mechanism.branches()) {
    std::vector<Pieces> per_agent;
    for (AgentIndex i = 0; i < instance.n(); ++i) {
      per_agent.push_back(
          WinSweep(*branch.rule, instance, i, Rational(), false).pieces);
    }
    out.push_back(std::move(per_agent));
  }
  return out;
}

std::size_t PieceIndex(const Pieces& pieces, const Rational& b) {
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const SweepPiece<bool>& p = pieces[k];
    if (p.point ? p.lo == b : (p.lo < b && (!p.hi || b < *p.hi))) return k;
  }
  throw Error(ErrorCode::kInternal, "bid " + b.ToString() + " not covered");
}

CheckResult MonotoneFrom(const Mechanism& mechanism,
                         const std::vector<std::vector<Pieces>>& sweeps) {
  CheckResult result{"monotone", true, ""};
  for (std::size_t b = 0; b < sweeps.size() && result.passed; ++b) {
    for (std::size_t i = 0; i < sweeps[b].size() && result.passed; ++i) {
      const SweepPiece<bool>* lost = nullptr;
      for (const SweepPiece<bool>& p : sweeps[b][i]) {
        if (!p.value && lost == nullptr) lost = &p;
        if (p.value && lost != nullptr) {
          result.passed = false;
          result.witness = BranchLabel(mechanism, b) + ", " +
                           Agent(static_cast<AgentIndex>(i)) +
                           ": loses at bid " + lost->probe.ToString() +
                           " but wins at bid " + p.probe.ToString();
          break;
        }
      }
    }
  }
  return result;
}

CheckResult TruthfulFrom(const Mechanism& mechanism, const Instance& instance,
                         const std::vector<std::vector<Pieces>>& sweeps) {
  CheckResult result{"truthful", true, ""};
  for (std::size_t b = 0; b < sweeps.size() && result.passed; ++b) {
    const AllocationRule& rule = *mechanism.branches()[b].rule;
    const bool composite = !rule.ThresholdComponents().empty();
    for (AgentIndex i = 0; i < instance.n() && result.passed; ++i) {
      const Pieces& pieces = sweeps[b][i];
      const Rational& cost = instance.cost(i);
      auto utility = [&](std::size_t k, const Rational& bid) {
        if (!pieces[k].value) return Rational();
        if (composite) {
          return WinnerPaymentFrom(rule, instance, i, bid) - cost;
        }
        for (std::size_t j = k; j < pieces.size(); ++j) {
          if (!pieces[j].value) return pieces[j].lo - cost;
        }
        throw Error(ErrorCode::kInternal, Agent(i) + " wins at every bid");
      };
      const Rational truthful = utility(PieceIndex(pieces, cost), cost);
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Rational& bid = pieces[k].probe;
        Rational u = utility(k, bid);
        if (u > truthful) {
          result.passed = false;
          result.witness = BranchLabel(mechanism, b) + ", " + Agent(i) +
                           " with cost " + cost.ToString() + ": bid " +
                           bid.ToString() + " yields utility " + u.ToString() +
                           " > truthful " + truthful.ToString();
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace

bool VerificationReport::AllPassed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string InstanceDigest(const Instance& instance) {
  std::string text = "B=" + instance.budget().ToString() + ";c=";
  for (const Rational& c : instance.costs()) text += c.ToString() + ",";
  text += ";v=" + instance.valuation().CanonicalForm();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

CheckResult CheckMonotone(const Mechanism& mechanism,
                          const Instance& instance) {
  return MonotoneFrom(mechanism, SweepAll(mechanism, instance));
}

CheckResult CheckTruthful(const Mechanism& mechanism,
                          const Instance& instance) {
  return TruthfulFrom(mechanism, instance, SweepAll(mechanism, instance));
}

CheckResult CheckIr(const Instance& instance, const RandomizedOutcome& paid) {
  CheckResult result{"individually_rational", true, ""};
  for (std::size_t b = 0; b < paid.branches.size() && result.passed; ++b) {
    const DeterministicOutcome& d = paid.branches[b].outcome;
    for (AgentIndex i = 0; i < instance.n(); ++i) {
      const Rational& p = d.payments[i];
      std::string problem;
      if (d.winners.Contains(i)) {
        if (instance.cost(i) > instance.budget()) {
          problem = "wins although its cost exceeds the budget";
        } else if (p < instance.cost(i)) {
          problem = "is paid " + p.ToString() + " below its cost " +
                    instance.cost(i).ToString();
        }
      } else if (p.sign() != 0) {
        problem = "loses but is paid " + p.ToString();
      }
      if (!problem.empty()) {
        result.passed = false;
        result.witness = "branch " + std::to_string(b) + " (" +
                         paid.branches[b].label + "), " + Agent(i) + " " +
                         problem;
        break;
      }
    }
  }
  return result;
}

CheckResult CheckBudgetFeasible(const Instance& instance,
                                const RandomizedOutcome& paid) {
  CheckResult result{"budget_feasible", true, ""};
  for (std::size_t b = 0; b < paid.branches.size(); ++b) {
    const DeterministicOutcome& d = paid.branches[b].outcome;
    Rational total = d.TotalPayment();
    if (total > instance.budget()) {
      result.passed = false;
      std::string detail;
      d.winners.ForEach([&](AgentIndex i) {
        detail += " " + std::to_string(i + 1) + ":" + d.payments[i].ToString();
      });
      result.witness = "branch " + std::to_string(b) + " (" +
                       paid.branches[b].label + ") pays " + total.ToString() +
                       " > budget " + instance.budget().ToString() +
                       "; winners" + detail;
      break;
    }
  }
  return result;
}

RatioResult EmpiricalRatio(const Instance& instance,
                           const RandomizedOutcome& outcome) {
  RatioResult r;
  r.opt = ExhaustiveOpt(instance).value;
  for (const OutcomeBranch& b : outcome.branches) {
    r.expected_value += b.probability * instance.Value(b.outcome.winners);
  }
  if (r.opt.sign() == 0) {
    r.value = Rational(1);
  } else if (r.expected_value.sign() == 0) {
    r.infinite = true;
  } else {
    r.value = r.opt / r.expected_value;
  }
  return r;
}

RatioResult EmpiricalRatio(const Mechanism& mechanism,
                           const Instance& instance) {
  return EmpiricalRatio(instance, mechanism.Allocate(instance));
}

CheckResult CheckSubmodular(const Valuation& valuation) {
  const int n = valuation.num_agents();
  if (n > 6) {
    throw Error(ErrorCode::kSizeLimit,
                "submodularity check limited to 6 agents");
  }
  CheckResult result{"submodular", true, ""};
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Rational> v(total);
  for (std::uint64_t m = 0; m < total; ++m) {
    v[m] = valuation.Value(AgentSet::FromMask(m));
  }
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::uint64_t t = 0; t < total; ++t) {
      auto pair = [&] {
        return AgentSet::FromMask(s).ToString() + ", " +
               AgentSet::FromMask(t).ToString();
      };
      if ((s & ~t) == 0 && v[s] > v[t]) {
        result.passed = false;
        result.witness = "not monotone on " + pair() + ": " + v[s].ToString() +
                         " > " + v[t].ToString();
        return result;
      }
      if (v[s] + v[t] < v[s | t] + v[s & t]) {
        result.passed = false;
        result.witness = "not submodular on " + pair() + ": " +
                         (v[s] + v[t]).ToString() + " < " +
                         (v[s | t] + v[s & t]).ToString();
        return result;
      }
    }
  }
  return result;
}

CheckResult CheckAssignment(const Mechanism& mechanism,
                            const Instance& instance) {
  const auto* tasks =
      dynamic_cast<const TaskValuedMatching*>(&instance.valuation());
  if (tasks == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment check needs a task-valued matching valuation");
  }
  CheckResult result{"assignment", true, ""};
  RandomizedOutcome outcome = mechanism.Allocate(instance);
  for (std::size_t b = 0; b < outcome.branches.size(); ++b) {
    try {
      tasks->ExtractAssignment(outcome.branches[b].outcome.winners);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kContractViolation) throw;
      result.passed = false;
      result.witness = "branch " + std::to_string(b) + " (" +
                       outcome.branches[b].label + "): " + e.what();
      break;
    }
  }
  return result;
}

VerificationReport Verify(const Mechanism& mechanism,
                          const Instance& instance, RandomizedOutcome* paid_out) {
  VerificationReport report;
  report.digest = InstanceDigest(instance);
  report.mechanism = mechanism.spec().ToString();
  const auto sweeps = SweepAll(mechanism, instance);
  report.checks.push_back(MonotoneFrom(mechanism, sweeps));
  report.checks.push_back(TruthfulFrom(mechanism, instance, sweeps));
  RandomizedOutcome paid = PaymentsForOutcome(mechanism, instance);
  report.checks.push_back(CheckIr(instance, paid));
  report.checks.push_back(CheckBudgetFeasible(instance, paid));
  if (mechanism.spec().matching_stop &&
      dynamic_cast<const TaskValuedMatching*>(&instance.valuation()) !=
          nullptr) {
    report.checks.push_back(CheckAssignment(mechanism, instance));
  }
  report.ratio = EmpiricalRatio(instance, paid);
  if (paid_out != nullptr) *paid_out = std::move(paid);
  return report;
}

}  // namespace bfm
