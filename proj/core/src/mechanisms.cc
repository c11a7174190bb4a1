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

#include "bfm/mechanisms.h"

#include <string>

#include "bfm/error.h"
#include "bfm/greedy.h"

namespace bfm {
namespace {

struct KindEntry {
  MechanismKind kind;
  std::string_view name;
};

constexpr KindEntry kKinds[] = {
    {MechanismKind::kGreedyTm, "greedy_tm"},
    {MechanismKind::kRandomTm, "random_tm"},
    {MechanismKind::kGreedyEom, "greedy_eom"},
    {MechanismKind::kRandomEom, "random_eom"},
    {MechanismKind::kDetEom, "det_eom"},
    {MechanismKind::kGreedyOm, "greedy_om"},
    {MechanismKind::kRandomOm, "random_om"},
    {MechanismKind::kRandomOmModified, "random_om_modified"},
    {MechanismKind::kDetLarge, "det_large"},
};

void RequireUnitInterval(const Rational& x, const char* what) {
  if (x.sign() <= 0 || x > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must lie in (0, 1], got " +
                    x.ToString());
  }
}

std::string Suffix(bool matching_stop) {
  return matching_stop ? ",stop" : "";
}

}  // namespace

std::string_view KindName(MechanismKind kind) {
  for (const KindEntry& e : kKinds) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

MechanismKind ParseKind(std::string_view name) {
  for (const KindEntry& e : kKinds) {
    if (e.name == name) return e.kind;
  }
  throw Error(ErrorCode::kParse,
              "unknown mechanism '" + std::string(name) + "'");
}

std::string_view OracleName(OracleKind kind) {
  return kind == OracleKind::kExhaustive ? "exhaustive" : "greedy3";
}

OracleKind ParseOracle(std::string_view name) {
  if (name == "exhaustive") return OracleKind::kExhaustive;
  if (name == "greedy3") return OracleKind::kGreedy3;
  throw Error(ErrorCode::kParse, "unknown oracle '" + std::string(name) + "'");
}

bool MechanismSpec::UsesGamma() const {
  return kind == MechanismKind::kGreedyTm || kind == MechanismKind::kRandomTm ||
         kind == MechanismKind::kDetLarge;
}

bool MechanismSpec::UsesAlpha() const {
  return kind == MechanismKind::kGreedyEom ||
         kind == MechanismKind::kRandomEom || kind == MechanismKind::kGreedyOm ||
         kind == MechanismKind::kRandomOm ||
         kind == MechanismKind::kRandomOmModified ||
         kind == MechanismKind::kDetLarge;
}

bool MechanismSpec::UsesOracle() const {
  return kind == MechanismKind::kGreedyOm || kind == MechanismKind::kRandomOm ||
         kind == MechanismKind::kRandomOmModified ||
         kind == MechanismKind::kDetLarge;
}

std::string MechanismSpec::ToString() const {
  std::string out(KindName(kind));
  std::string args;
  auto add = [&args](const std::string& s) {
    if (!args.empty()) args += ",";
    args += s;
  };
  if (UsesAlpha()) add("alpha=" + alpha.ToString());
  if (UsesGamma()) add("gamma=" + gamma.ToString());
  if (UsesOracle()) add("oracle=" + std::string(OracleName(oracle)));
  if (rating) add("r=" + rating->ToString());
  if (matching_stop) add("stop");
  return out + "(" + args + ")";
}

AllocationRule::~AllocationRule() = default;

GreedyTmRule::GreedyTmRule(Rational gamma, bool matching_stop)
    : gamma_(std::move(gamma)), matching_stop_(matching_stop) {}

std::string GreedyTmRule::name() const {
  return "greedy_tm(" + gamma_.ToString() + Suffix(matching_stop_) + ")";
}

AgentSet GreedyTmRule::Walk(const Instance& instance, AgentIndex target,
                            BidWatch* watch) const {
  const AgentSet feasible = FeasibleFilter(instance, watch);
  if (target >= 0 && !feasible.Contains(target)) return {};
  const Rational scale = gamma_ * instance.budget();
  AgentSet winners;
  GreedyOrder(instance, feasible, watch,
              [&](int, AgentIndex a, const Rational& m, const Rational& vk) {
                bool admit;
                if (m.sign() == 0) {
                  if (matching_stop_) return false;
                  // Literal test c v(S_k) <= 0 with v(S_k) > 0, and the
                  // same rule when everything so far is worthless.
                  admit = instance.cost(a).sign() == 0;
                } else {
                  if (Watching(watch, a)) watch->Note(scale * m / vk);
                  admit = instance.cost(a) * vk <= scale * m;
                }
                if (!admit) return false;
                winners.Insert(a);
                return a != target;
              });
  return winners;
}

AgentSet GreedyTmRule::Run(const Instance& instance) const {
  return Walk(instance, -1, nullptr);
}

bool GreedyTmRule::Wins(const Instance& instance, AgentIndex i,
                        BidWatch* watch) const {
  return Walk(instance, i, watch).Contains(i);
}

GreedyEomRule::GreedyEomRule(Rational alpha,
                             std::shared_ptr<const BudgetOracle> optimum,
                             bool matching_stop)
    : alpha_(std::move(alpha)),
      optimum_(std::move(optimum)),
      matching_stop_(matching_stop) {
  if (optimum_ == nullptr || !optimum_->exact()) {
    throw Error(ErrorCode::kInvalidArgument,
                "greedy_eom needs an exact optimum provider");
  }
}

std::string GreedyEomRule::name() const {
  return "greedy_eom(" + alpha_.ToString() + Suffix(matching_stop_) + ")";
}

AgentSet GreedyEomRule::Walk(const Instance& instance, AgentIndex target,
                             BidWatch* watch) const {
  const AgentSet feasible = FeasibleFilter(instance, watch);
  if (target >= 0 && !feasible.Contains(target)) return {};
  std::shared_ptr<const StepFunction> profile;
  Rational opt;
  if (watch != nullptr && feasible.Contains(watch->agent)) {
    profile = optimum_->BidProfile(instance, feasible, watch->agent);
    opt = profile->Value(instance.cost(watch->agent));
  } else {
    opt = optimum_->Solve(instance, feasible).value;
  }
  const Rational bound = alpha_ * opt;
  AgentSet winners;
  GreedyOrder(instance, feasible, watch,
              [&](int, AgentIndex a, const Rational& m, const Rational& vk) {
                if (m.sign() == 0 && matching_stop_) return false;
                if (profile) {
                  std::optional<Rational> t = profile->NextBreakWhere(
                      watch->floor,
                      [&](const Rational& v) { return vk <= alpha_ * v; });
                  if (t) watch->Note(*t);
                }
                bool admit = vk <= bound;
                if (m.sign() == 0 && instance.cost(a).sign() != 0) {
                  admit = false;
                }
                if (!admit) return false;
                winners.Insert(a);
                return a != target;
              });
  return winners;
}

AgentSet GreedyEomRule::Run(const Instance& instance) const {
  return Walk(instance, -1, nullptr);
}

bool GreedyEomRule::Wins(const Instance& instance, AgentIndex i,
                         BidWatch* watch) const {
  return Walk(instance, i, watch).Contains(i);
}

GreedyOmRule::GreedyOmRule(Rational alpha,
                           std::shared_ptr<const BudgetOracle> oracle,
                           bool matching_stop, bool modified)
    : alpha_(std::move(alpha)),
      oracle_(std::move(oracle)),
      matching_stop_(matching_stop),
      modified_(modified) {
  if (oracle_ == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "greedy_om needs an oracle");
  }
}

std::string GreedyOmRule::name() const {
  return std::string(modified_ ? "greedy_om_modified(" : "greedy_om(") +
         alpha_.ToString() + "," + std::string(oracle_->name()) +
         Suffix(matching_stop_) + ")";
}

Rational GreedyOmRule::Bound(const Instance& instance, const AgentSet& feasible,
                             AgentIndex a) const {
  if (modified_) {
    return oracle_->BidMaxProfile(instance, feasible, a)
        ->Value(instance.cost(a));
  }
  return oracle_->Solve(instance, feasible.Without(a)).value;
}

AgentSet GreedyOmRule::Run(const Instance& instance) const {
  const AgentSet feasible = FeasibleFilter(instance);
  AgentSet winners;
  GreedyOrder(instance, feasible, nullptr,
              [&](int, AgentIndex a, const Rational& m, const Rational& vk) {
                if (m.sign() == 0) {
                  if (matching_stop_) return false;
                  if (instance.cost(a).sign() != 0) return true;
                }
                if (vk <= alpha_ * Bound(instance, feasible, a)) {
                  winners.Insert(a);
                }
                return true;
              });
  return winners;
}

bool GreedyOmRule::Wins(const Instance& instance, AgentIndex i,
                        BidWatch* watch) const {
  const AgentSet feasible = FeasibleFilter(instance, watch);
  if (!feasible.Contains(i)) return false;
  std::optional<Rational> marginal, prefix_value;
  GreedyOrder(instance, feasible, watch,
              [&](int, AgentIndex a, const Rational& m, const Rational& vk) {
                if (m.sign() == 0 && matching_stop_) return false;
                if (a != i) return true;
                marginal = m;
                prefix_value = vk;
                return false;
              });
  if (!marginal) return false;
  if (marginal->sign() == 0 && instance.cost(i).sign() != 0) return false;
  if (modified_) {
    auto profile = oracle_->BidMaxProfile(instance, feasible, i);
    if (Watching(watch, i)) {
      std::optional<Rational> t = profile->NextBreakWhere(
          watch->floor,
          [&](const Rational& v) { return *prefix_value <= alpha_ * v; });
      if (t) watch->Note(*t);
    }
    return *prefix_value <= alpha_ * profile->Value(instance.cost(i));
  }
  return *prefix_value <=
         alpha_ * oracle_->Solve(instance, feasible.Without(i)).value;
}

AgentSet BestSingleRule::Run(const Instance& instance) const {
  const AgentSet feasible = FeasibleFilter(instance);
  if (feasible.Empty()) return {};
  return AgentSet{BestSingle(instance, feasible)};
}

bool BestSingleRule::Wins(const Instance& instance, AgentIndex i,
                          BidWatch* watch) const {
  const AgentSet feasible = FeasibleFilter(instance, watch);
  if (!feasible.Contains(i)) return false;
  return BestSingle(instance, feasible) == i;
}

DeterministicEomRule::DeterministicEomRule(
    std::shared_ptr<const BudgetOracle> optimum, bool matching_stop)
    : optimum_(optimum), eom_(Rational(1, 2), optimum, matching_stop) {}

bool DeterministicEomRule::PrefersSingle(const Rational& single,
                                         const Rational& rest) {
  Rational lhs = single * 4 + rest * 3;
  return lhs * lhs >= rest * rest * 17;
}

AgentSet DeterministicEomRule::Run(const Instance& instance) const {
  const AgentSet feasible = FeasibleFilter(instance);
  if (feasible.Empty()) return {};
  const AgentIndex best = BestSingle(instance, feasible);
  const Rational rest = optimum_->Solve(instance, feasible.Without(best)).value;
  if (PrefersSingle(instance.Value(AgentSet{best}), rest)) {
    return AgentSet{best};
  }
  return eom_.Run(instance);
}

bool DeterministicEomRule::Wins(const Instance& instance, AgentIndex i,
                                BidWatch* watch) const {
  const AgentSet feasible = FeasibleFilter(instance, watch);
  if (!feasible.Contains(i)) return false;
  const AgentIndex best = BestSingle(instance, feasible);
  const Rational single = instance.Value(AgentSet{best});
  Rational rest;
  if (i == best) {
    rest = optimum_->Solve(instance, feasible.Without(best)).value;
  } else {
    auto profile = optimum_->BidProfile(instance, feasible.Without(best), i);
    rest = profile->Value(instance.cost(i));
    if (Watching(watch, i)) {
      std::optional<Rational> t = profile->NextBreakWhere(
          watch->floor,
          [&](const Rational& v) { return PrefersSingle(single, v); });
      if (t) watch->Note(*t);
    }
  }
  if (PrefersSingle(single, rest)) return i == best;
  return eom_.Wins(instance, i, watch);
}

DeterministicLargeRule::DeterministicLargeRule(
    std::shared_ptr<const GreedyTmRule> tm,
    std::shared_ptr<const GreedyOmRule> om)
    : tm_(std::move(tm)), om_(std::move(om)) {}

std::string DeterministicLargeRule::name() const {
  return "det_large[" + om_->name() + "&" + tm_->name() + "]";
}

AgentSet DeterministicLargeRule::Run(const Instance& instance) const {
  return tm_->Run(instance) & om_->Run(instance);
}

bool DeterministicLargeRule::Wins(const Instance& instance, AgentIndex i,
                                  BidWatch* watch) const {
  return tm_->Wins(instance, i, watch) && om_->Wins(instance, i, watch);
}

std::vector<std::shared_ptr<const AllocationRule>>
DeterministicLargeRule::ThresholdComponents() const {
  return {tm_, om_};
}

Rational DeterministicOutcome::TotalPayment() const {
  Rational total;
  for (const Rational& p : payments) total += p;
  return total;
}

std::shared_ptr<const BudgetOracle> MakeOracle(OracleKind kind,
                                               int seed_size) {
  if (kind == OracleKind::kExhaustive) {
    return std::make_shared<const ExhaustiveOracle>();
  }
  return std::make_shared<const SviridenkoOracle>(seed_size);
}

Mechanism::Mechanism(MechanismSpec spec, std::vector<MechanismBranch> branches)
    : spec_(std::move(spec)), branches_(std::move(branches)) {
  Rational total;
  for (const MechanismBranch& b : branches_) {
    if (b.probability.sign() <= 0 || b.rule == nullptr) {
      throw Error(ErrorCode::kInvalidArgument, "malformed mechanism branch");
    }
    total += b.probability;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "branch probabilities sum to " + total.ToString());
  }
}

Mechanism::Mechanism(const MechanismSpec& spec) : spec_(spec) {
  const bool stop = spec.matching_stop;
  if (spec.UsesGamma()) RequireUnitInterval(spec.gamma, "gamma");
  if (spec.UsesAlpha()) RequireUnitInterval(spec.alpha, "alpha");
  // The optimum-based rules lose monotonicity with an approximate optimum.
  auto exhaustive = [&] {
    if (spec.oracle != OracleKind::kExhaustive) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(KindName(spec.kind)) +
                      " needs the exhaustive optimum");
    }
    oracle_ = MakeOracle(OracleKind::kExhaustive);
    return oracle_;
  };
  auto best = std::make_shared<const BestSingleRule>();
  switch (spec.kind) {
    case MechanismKind::kGreedyTm:
      branches_ = {{1, std::make_shared<const GreedyTmRule>(spec.gamma, stop)}};
      break;
    case MechanismKind::kRandomTm: {
      const Rational g = spec.gamma;
      branches_ = {
          {(g + 1) / (g + 2),
           std::make_shared<const GreedyTmRule>(spec.gamma, stop)},
          {Rational(1) / (g + 2), best}};
      break;
    }
    case MechanismKind::kGreedyEom:
      branches_ = {{1, std::make_shared<const GreedyEomRule>(
                           spec.alpha, exhaustive(), stop)}};
      break;
    case MechanismKind::kRandomEom:
      branches_ = {{Rational(1, 2), std::make_shared<const GreedyEomRule>(
                                        spec.alpha, exhaustive(), stop)},
                   {Rational(1, 2), best}};
      break;
    case MechanismKind::kDetEom:
      branches_ = {
          {1, std::make_shared<const DeterministicEomRule>(exhaustive(), stop)}};
      break;
    case MechanismKind::kGreedyOm:
      oracle_ = MakeOracle(spec.oracle, spec.seed_size);
      branches_ = {{1, std::make_shared<const GreedyOmRule>(spec.alpha, oracle_,
                                                            stop, false)}};
      break;
    case MechanismKind::kRandomOm: {
      oracle_ = MakeOracle(spec.oracle, spec.seed_size);
      std::optional<Rational> r = spec.rating ? spec.rating : oracle_->rating();
      if (!r || *r < Rational(1)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "random_om needs an oracle rating r >= 1");
      }
      const Rational& a = spec.alpha;
      branches_ = {{*r / (a + *r * 2), std::make_shared<const GreedyOmRule>(
                                           spec.alpha, oracle_, stop, false)},
                   {(a + *r) / (a + *r * 2), best}};
      break;
    }
    case MechanismKind::kRandomOmModified:
      oracle_ = MakeOracle(spec.oracle, spec.seed_size);
      branches_ = {{Rational(1, 2), std::make_shared<const GreedyOmRule>(
                                        spec.alpha, oracle_, stop, true)},
                   {Rational(1, 2), best}};
      break;
    case MechanismKind::kDetLarge: {
      if (spec.alpha * (spec.gamma + 1) > Rational(1)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "det_large needs alpha <= 1/(1+gamma), got alpha=" +
                        spec.alpha.ToString() +
                        " gamma=" + spec.gamma.ToString());
      }
      oracle_ = MakeOracle(spec.oracle, spec.seed_size);
      branches_ = {{1, std::make_shared<const DeterministicLargeRule>(
                           std::make_shared<const GreedyTmRule>(spec.gamma,
                                                                stop),
                           std::make_shared<const GreedyOmRule>(
                               spec.alpha, oracle_, stop, false))}};
      break;
    }
  }
}

RandomizedOutcome Mechanism::Allocate(const Instance& instance) const {
  RandomizedOutcome out;
  for (const MechanismBranch& b : branches_) {
    DeterministicOutcome d;
    d.winners = b.rule->Run(instance);
    d.payments.assign(instance.n(), Rational());
    out.branches.push_back({b.probability, b.rule->name(), std::move(d)});
  }
  return out;
}

AgentSet GreedyTm(const Instance& instance, const Rational& gamma,
                  bool matching_stop) {
  return GreedyTmRule(gamma, matching_stop).Run(instance);
}

AgentSet GreedyEom(const Instance& instance, const Rational& alpha,
                   std::shared_ptr<const BudgetOracle> optimum,
                   bool matching_stop) {
  return GreedyEomRule(alpha, std::move(optimum), matching_stop).Run(instance);
}

AgentSet DeterministicEom(const Instance& instance, bool matching_stop) {
  return DeterministicEomRule(MakeOracle(OracleKind::kExhaustive),
                              matching_stop)
      .Run(instance);
}

AgentSet GreedyOm(const Instance& instance, const Rational& alpha,
                  std::shared_ptr<const BudgetOracle> oracle,
                  bool matching_stop) {
  return GreedyOmRule(alpha, std::move(oracle), matching_stop, false)
      .Run(instance);
}

AgentSet DeterministicLarge(const Instance& instance, const Rational& alpha,
                            const Rational& gamma,
                            std::shared_ptr<const BudgetOracle> oracle,
                            bool matching_stop) {
  if (alpha * (gamma + 1) > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "det_large needs alpha <= 1/(1+gamma)");
  }
  return GreedyTmRule(gamma, matching_stop).Run(instance) &
         GreedyOmRule(alpha, std::move(oracle), matching_stop, false)
             .Run(instance);
}

}  // namespace bfm
