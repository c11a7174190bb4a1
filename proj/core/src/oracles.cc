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

#include "bfm/oracles.h"

#include <algorithm>
#include <bit>
#include <string>

#include "bfm/error.h"
#include "bfm/greedy.h"
#include "bfm/sweep.h"

namespace bfm {
namespace {

// Lexicographic order of the sorted member lists of two bitmasks.
bool LexLessMask(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int t = std::countr_zero(a ^ b);
  if ((a >> t) & 1) return (b >> t) != 0;
  return (a >> t) == 0;
}

// Subset sums and global masks of all subsets of `members`, indexed by the
// local bitmask.
struct SubsetTable {
  std::vector<Rational> cost;
  std::vector<std::uint64_t> mask;
};

SubsetTable BuildSubsets(const Instance& instance,
                         const std::vector<AgentIndex>& members) {
  const std::size_t total = std::size_t{1} << members.size();
  SubsetTable t;
  t.cost.resize(total);
  t.mask.resize(total);
  for (std::size_t m = 1; m < total; ++m) {
    const int low = std::countr_zero(m);
    const std::size_t prev = m & (m - 1);
    t.cost[m] = t.cost[prev] + instance.cost(members[low]);
    t.mask[m] = t.mask[prev] | (std::uint64_t{1} << members[low]);
  }
  return t;
}

}  // namespace

BudgetOracle::~BudgetOracle() = default;

std::size_t BudgetOracle::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::uint64_t>()(k.valuation);
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(k.budget.Hash());
  mix(k.available.Hash());
  mix(static_cast<std::size_t>(k.agent + 1));
  for (const Rational& c : k.costs) mix(c.Hash());
  return h;
}

BudgetOracle::Key BudgetOracle::MakeKey(const Instance& instance,
                                        const AgentSet& available,
                                        AgentIndex agent) {
  Key key{instance.valuation().uid(), instance.budget(), available, agent, {}};
  available.ForEach([&](AgentIndex a) {
    if (a != agent) key.costs.push_back(instance.cost(a));
  });
  return key;
}

OracleResult BudgetOracle::Solve(const Instance& instance,
                                 const AgentSet& available) const {
  Key key = MakeKey(instance, available, -1);
  {
    std::lock_guard lock(mu_);
    auto it = solved_.find(key);
    if (it != solved_.end()) return it->second;
  }
  OracleResult result = DoSolve(instance, available);
  std::lock_guard lock(mu_);
  if (solved_.size() >= kMaxEntries) solved_.clear();
  solved_.emplace(std::move(key), result);
  return result;
}

OracleResult BudgetOracle::Solve(const Instance& instance) const {
  return Solve(instance, FeasibleFilter(instance));
}

std::shared_ptr<const StepFunction> BudgetOracle::BidProfile(
    const Instance& instance, const AgentSet& available, AgentIndex i) const {
  if (!available.Contains(i)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bid profile agent must be available");
  }
  Key key = MakeKey(instance, available, i);
  {
    std::lock_guard lock(mu_);
    auto it = profiles_.find(key);
    if (it != profiles_.end()) return it->second;
  }
  auto profile = std::make_shared<const StepFunction>(
      DoProfile(instance, available, i));
  std::lock_guard lock(mu_);
  if (profiles_.size() >= kMaxEntries) profiles_.clear();
  profiles_.emplace(std::move(key), profile);
  return profile;
}

std::shared_ptr<const StepFunction> BudgetOracle::BidMaxProfile(
    const Instance& instance, const AgentSet& available, AgentIndex i) const {
  Key key = MakeKey(instance, available, i);
  {
    std::lock_guard lock(mu_);
    auto it = max_profiles_.find(key);
    if (it != max_profiles_.end()) return it->second;
  }
  auto profile = std::make_shared<const StepFunction>(
      BidProfile(instance, available, i)->SuffixMax());
  std::lock_guard lock(mu_);
  if (max_profiles_.size() >= kMaxEntries) max_profiles_.clear();
  max_profiles_.emplace(std::move(key), profile);
  return profile;
}

void ExhaustiveOracle::CheckSize(const Instance& instance) const {
  if (instance.n() > limit_) {
    throw Error(ErrorCode::kSizeLimit,
                "exhaustive oracle limited to " + std::to_string(limit_) +
                    " agents, instance has " + std::to_string(instance.n()));
  }
}

OracleResult ExhaustiveOracle::DoSolve(const Instance& instance,
                                       const AgentSet& available) const {
  CheckSize(instance);
  const std::vector<AgentIndex> members = available.Members();
  const SubsetTable t = BuildSubsets(instance, members);
  std::uint64_t best_mask = 0;
  Rational best_value = instance.Value(AgentSet());
  for (std::size_t m = 1; m < t.mask.size(); ++m) {
    if (t.cost[m] > instance.budget()) continue;
    Rational v = instance.Value(AgentSet::FromMask(t.mask[m]));
    if (v > best_value ||
        (v == best_value && LexLessMask(t.mask[m], best_mask))) {
      best_value = v;
      best_mask = t.mask[m];
    }
  }
  return {AgentSet::FromMask(best_mask), best_value};
}

StepFunction ExhaustiveOracle::DoProfile(const Instance& instance,
                                         const AgentSet& available,
                                         AgentIndex i) const {
  CheckSize(instance);
  const std::vector<AgentIndex> others = available.Without(i).Members();
  const SubsetTable t = BuildSubsets(instance, others);
  const Rational& budget = instance.budget();
  // W: best set avoiding i. Sets with i are feasible while i's bid stays
  // within their slack B - c(S \ i).
  Rational without = instance.Value(AgentSet());
  std::vector<std::pair<Rational, Rational>> with;  // (slack, value)
  for (std::size_t m = 0; m < t.mask.size(); ++m) {
    if (t.cost[m] > budget) continue;
    AgentSet s = AgentSet::FromMask(t.mask[m]);
    without = Max(without, instance.Value(s));
    with.emplace_back(budget - t.cost[m], instance.Value(s.With(i)));
  }
  std::sort(with.begin(), with.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  // Distinct slacks, descending, with the best value at or above each.
  std::vector<std::pair<Rational, Rational>> levels;
  Rational running = without;
  for (const auto& [slack, value] : with) {
    running = Max(running, value);
    if (!levels.empty() && levels.back().first == slack) {
      levels.back().second = running;
    } else {
      levels.emplace_back(slack, running);
    }
  }
  std::reverse(levels.begin(), levels.end());
  std::vector<Rational> bps, points, intervals;
  if (levels.empty() || levels.front().first.sign() > 0) {
    Rational v = levels.empty() ? without : levels.front().second;
    bps.push_back(Rational());
    points.push_back(v);
    intervals.push_back(v);
  }
  for (std::size_t j = 0; j < levels.size(); ++j) {
    bps.push_back(levels[j].first);
    points.push_back(levels[j].second);
    intervals.push_back(j + 1 < levels.size() ? levels[j + 1].second
                                              : without);
  }
  return StepFunction(std::move(bps), std::move(points), std::move(intervals));
}

SviridenkoOracle::SviridenkoOracle(int seed_size) : seed_size_(seed_size) {
  if (seed_size < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative seed size");
  }
}

std::optional<Rational> SviridenkoOracle::rating() const {
  if (seed_size_ >= 3) return Rational(791, 500);
  return std::nullopt;
}

std::vector<AgentSet> SviridenkoOracle::Seeds(const AgentSet& available) const {
  const std::vector<AgentIndex> members = available.Members();
  const int n = static_cast<int>(members.size());
  std::vector<AgentSet> out;
  std::vector<int> pick;
  for (int size = 0; size <= std::min(seed_size_, n); ++size) {
    pick.resize(size);
    for (int j = 0; j < size; ++j) pick[j] = j;
    for (;;) {
      AgentSet s;
      for (int j : pick) s.Insert(members[j]);
      out.push_back(s);
      int j = size - 1;
      while (j >= 0 && pick[j] == n - size + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int k = j + 1; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return out;
}

OracleResult SviridenkoOracle::Complete(const Instance& instance,
                                        const AgentSet& available,
                                        const AgentSet& seed,
                                        BidWatch* watch) const {
  const AgentIndex wi = watch != nullptr ? watch->agent : -1;
  const Rational& budget = instance.budget();
  Rational spent = instance.Cost(seed);
  if (wi >= 0 && seed.Contains(wi)) {
    watch->Note(budget - (spent - instance.cost(wi)));
  }
  if (spent > budget) return {AgentSet(), Rational()};

  AgentSet s = seed;
  Rational value = instance.Value(s);
  std::vector<AgentIndex> rest = (available - seed).Members();
  std::vector<Rational> marginal(rest.size());
  for (;;) {
    const bool holds_watched = wi >= 0 && s.Contains(wi);
    const Rational others_spent =
        holds_watched ? spent - instance.cost(wi) : spent;
    int best = -1;
    int self = -1;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      const AgentIndex a = rest[j];
      if (holds_watched) watch->Note(budget - others_spent - instance.cost(a));
      if (a == wi) watch->Note(budget - spent);
      if (spent + instance.cost(a) > budget) continue;
      marginal[j] = instance.Value(s.With(a)) - value;
      if (a == wi) {
        self = static_cast<int>(j);
        continue;
      }
      if (best < 0 ||
          GreedyPrecedes(a, marginal[j], instance.cost(a), rest[best],
                         marginal[best], instance.cost(rest[best]))) {
        best = static_cast<int>(j);
      }
    }
    if (self >= 0) {
      if (best >= 0) {
        const Rational& mi = marginal[self];
        const Rational& mw = marginal[best];
        const Rational& cw = instance.cost(rest[best]);
        if (mi.sign() > 0 && mw.sign() > 0 && cw.sign() > 0) {
          watch->Note(cw * mi / mw);
        }
      }
      if (best < 0 ||
          GreedyPrecedes(wi, marginal[self], instance.cost(wi), rest[best],
                         marginal[best], instance.cost(rest[best]))) {
        best = self;
      }
    }
    if (best < 0 || marginal[best].sign() <= 0) break;
    s.Insert(rest[best]);
    spent += instance.cost(rest[best]);
    value += marginal[best];
    rest.erase(rest.begin() + best);
    marginal.erase(marginal.begin() + best);
  }
  return {s, value};
}

OracleResult SviridenkoOracle::DoSolve(const Instance& instance,
                                       const AgentSet& available) const {
  OracleResult best{AgentSet(), instance.Value(AgentSet())};
  for (const AgentSet& seed : Seeds(available)) {
    OracleResult r = Complete(instance, available, seed, nullptr);
    if (r.value > best.value) best = r;
  }
  return best;
}

StepFunction SviridenkoOracle::DoProfile(const Instance& instance,
                                         const AgentSet& available,
                                         AgentIndex i) const {
  StepFunction f;
  for (const AgentSet& seed : Seeds(available)) {
    SweepResult<Rational> sweep = Sweep<Rational>(
        i, Rational(),
        [&](const Rational& b, BidWatch& watch) {
          return Complete(instance.WithCost(i, b), available, seed, &watch)
              .value;
        });
    f = StepFunction::Max(f, StepFunction::FromPieces(sweep.pieces));
  }
  return f;
}

OracleResult ExhaustiveOpt(const Instance& instance) {
  static const ExhaustiveOracle oracle;
  return oracle.Solve(instance);
}

OracleResult SviridenkoGreedy(const Instance& instance) {
  static const SviridenkoOracle oracle;
  return oracle.Solve(instance);
}

Rational OracleMaxOverBids(const Instance& instance,
                           const BudgetOracle& oracle, AgentIndex i) {
  AgentSet available = FeasibleFilter(instance).With(i);
  return oracle.BidMaxProfile(instance, available, i)->Value(instance.cost(i));
}

Rational LargeMarketTheta(const Instance& instance) {
  const AgentSet feasible = FeasibleFilter(instance);
  const Rational opt = ExhaustiveOpt(instance).value;
  if (opt.sign() == 0) {
    throw Error(ErrorCode::kDegenerateInstance, "optimum value is zero");
  }
  Rational best;
  feasible.ForEach(
      [&](AgentIndex a) { best = Max(best, instance.Value(AgentSet{a})); });
  return best / opt;
}

}  // namespace bfm
