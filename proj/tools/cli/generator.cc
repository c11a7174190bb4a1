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

#include "cli/generator.h"

#include <limits>
#include <memory>

#include "bfm/error.h"
#include "bfm/oracles.h"
#include "bfm/valuations.h"

namespace bfm::cli {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

void CheckRange(const IntRange& r, const std::string& name) {
  if (r.den <= 0) Invalid(name + ": denominator must be positive");
  if (r.lo > r.hi) Invalid(name + ": empty range");
  if (r.lo < 0) Invalid(name + ": must be non-negative");
}

std::shared_ptr<const Valuation> MakeValuation(const GeneratorSpec& spec,
                                               int n, Sampler& rng) {
  if (spec.family == "additive") {
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i) values.push_back(rng.Draw(spec.value));
    return std::make_shared<AdditiveValuation>(std::move(values));
  }
  if (spec.family == "coverage") {
    std::vector<Rational> weights;
    for (int e = 0; e < spec.elements; ++e) {
      weights.push_back(rng.Draw(spec.value));
    }
    std::vector<std::vector<int>> covers(n);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < spec.elements; ++e) {
        if (rng.Bernoulli(spec.density_num, spec.density_den)) {
          covers[i].push_back(e);
        }
      }
      // Nobody is useless by construction.
      if (covers[i].empty()) {
        covers[i].push_back(static_cast<int>(rng.Below(spec.elements)));
      }
    }
    return std::make_shared<CoverageValuation>(std::move(weights),
                                               std::move(covers));
  }
  const bool task_valued = spec.family == "task_matching";
  if (spec.family != "matching" && !task_valued) {
    Invalid("unknown family '" + spec.family + "'");
  }
  std::vector<std::pair<AgentIndex, int>> pairs;
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int t = 0; t < spec.tasks; ++t) {
      if (rng.Bernoulli(spec.density_num, spec.density_den)) {
        pairs.emplace_back(i, t);
        any = true;
      }
    }
    if (!any) pairs.emplace_back(i, static_cast<int>(rng.Below(spec.tasks)));
  }
  if (task_valued) {
    std::vector<Rational> task_values;
    for (int t = 0; t < spec.tasks; ++t) {
      task_values.push_back(rng.Draw(spec.value));
    }
    return std::make_shared<TaskValuedMatching>(
        n, std::move(task_values), std::move(pairs),
        std::vector<std::string>{});
  }
  std::vector<MatchingEdge> edges;
  for (const auto& [a, t] : pairs) edges.push_back({a, t, rng.Draw(spec.value)});
  return std::make_shared<MatchingValuation>(n, spec.tasks, std::move(edges),
                                             std::vector<std::string>{});
}

Instance Draw(const GeneratorSpec& spec, Sampler& rng) {
  const int n = static_cast<int>(rng.Between(spec.n_min, spec.n_max));
  std::vector<Rational> costs;
  Rational total;
  for (int i = 0; i < n; ++i) {
    costs.push_back(rng.Draw(spec.cost));
    total += costs.back();
  }
  auto valuation = MakeValuation(spec, n, rng);
  Rational budget = rng.Draw(spec.budget_fraction) * total;
  if (budget.sign() <= 0) budget = Rational(1);
  return Instance(std::move(costs), std::move(budget), std::move(valuation));
}

std::optional<Rational> Theta(const Instance& instance) {
  try {
    return LargeMarketTheta(instance);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegenerateInstance) return std::nullopt;
    throw;
  }
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Sampler::Below(std::uint64_t bound) {
  if (bound == 0) Invalid("Sampler::Below: empty range");
  // Reject the short tail so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Sampler::Between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Below(span));
}

bool Sampler::Bernoulli(std::int64_t num, std::int64_t den) {
  return static_cast<std::int64_t>(Below(static_cast<std::uint64_t>(den))) <
         num;
}

Rational Sampler::Draw(const IntRange& range) {
  return Rational(Between(range.lo, range.hi), range.den);
}

Rational Sampler::Unit() {
  return Rational(static_cast<std::int64_t>(engine_() >> 11),
                  std::int64_t{1} << 53);
}

void ValidateGeneratorSpec(const GeneratorSpec& spec) {
  if (spec.n_min <= 0 || spec.n_max <= 0) Invalid("n must be positive");
  if (spec.n_min > spec.n_max) Invalid("n_min exceeds n_max");
  if (spec.n_max > kMaxAgents) Invalid("n exceeds the agent limit");
  CheckRange(spec.cost, "cost");
  CheckRange(spec.value, "value");
  CheckRange(spec.budget_fraction, "budget_fraction");
  if (spec.family == "coverage" && spec.elements <= 0) {
    Invalid("coverage needs at least one element");
  }
  if ((spec.family == "matching" || spec.family == "task_matching") &&
      spec.tasks <= 0) {
    Invalid("matching needs at least one task");
  }
  if (spec.density_den <= 0 || spec.density_num < 0 ||
      spec.density_num > spec.density_den) {
    Invalid("density must lie in [0, 1]");
  }
  if (spec.theta_cap) {
    if (spec.theta_cap->sign() <= 0) Invalid("theta cap must be positive");
    // max_i v(i) >= opt/|S*| >= opt/n, so theta >= 1/n always.
    if (*spec.theta_cap * Rational(spec.n_max) < Rational(1)) {
      Invalid("theta cap " + spec.theta_cap->ToString() +
              " is below 1/n for every n <= " + std::to_string(spec.n_max) +
              "; no instance can satisfy it");
    }
    if (spec.n_max > 20) Invalid("theta cap needs n <= 20 (exact optimum)");
  }
}

Instance GenerateInstance(const GeneratorSpec& spec, std::uint64_t index) {
  ValidateGeneratorSpec(spec);
  Sampler rng(SplitMix64(spec.seed + index));
  if (!spec.theta_cap) return Draw(spec, rng);

  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Instance instance = Draw(spec, rng);
    if (*spec.theta_cap * Rational(instance.n()) < Rational(1)) continue;
    const Rational total = instance.Cost(instance.agents());
    // Rescale: doubling the budget can only grow opt, so theta only drops.
    for (;;) {
      auto theta = Theta(instance);
      if (!theta) break;
      if (*theta <= *spec.theta_cap) return instance;
      if (instance.budget() >= total) break;
      Rational next = Min(instance.budget() * Rational(2), total);
      instance = Instance(instance.costs(), next, instance.valuation_ptr());
    }
  }
  throw Error(ErrorCode::kDegenerateInstance,
              "no instance met theta cap " + spec.theta_cap->ToString() +
                  " after " + std::to_string(spec.max_attempts) + " attempts");
}

}  // namespace bfm::cli
