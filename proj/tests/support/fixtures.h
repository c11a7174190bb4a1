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

// Small named instances used across the unit tests.

#ifndef BFM_TESTS_SUPPORT_FIXTURES_H_
#define BFM_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>
#include <vector>

#include "bfm/instance.h"
#include "bfm/valuations.h"
#include "cli/generator.h"
#include "support/corpus.h"

namespace bfm::fixtures {

inline Instance Additive(std::vector<Rational> values,
                         std::vector<Rational> costs, Rational budget) {
  return Instance(std::move(costs), std::move(budget),
                  std::make_shared<AdditiveValuation>(std::move(values)));
}

// v = (3,3,3,3), c = (1,1,1,1), B = 2.
inline Instance E1() { return Additive({3, 3, 3, 3}, {1, 1, 1, 1}, 2); }

// The five-item instance: v = (1, 9/10 x4), c = (0, 1 x4), B = 4.
inline Instance E2() {
  const Rational e(9, 10);
  return Additive({1, e, e, e, e}, {0, 1, 1, 1, 1}, 4);
}

// Coverage over {x,y,z}: a1 -> {x,y}, a2 -> {y,z}, a3 -> {z}; unit costs, B = 3.
inline std::shared_ptr<CoverageValuation> E3Valuation() {
  return std::make_shared<CoverageValuation>(
      std::vector<Rational>{1, 1, 1},
      std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2}},
      std::vector<std::string>{"x", "y", "z"});
}
inline Instance E3() { return Instance({1, 1, 1}, 3, E3Valuation()); }

// Tasks t1 (5), t2 (3); a1 -> {t1, t2}, a2 -> {t1}; unit costs, B = 2.
inline std::shared_ptr<TaskValuedMatching> E4Valuation() {
  return std::make_shared<TaskValuedMatching>(
      2, std::vector<Rational>{5, 3},
      std::vector<std::pair<AgentIndex, int>>{{0, 0}, {0, 1}, {1, 0}},
      std::vector<std::string>{"t1", "t2"});
}
inline Instance E4() { return Instance({1, 1}, 2, E4Valuation()); }

// v = (10,1,1), c = (1,1,1), B = 2.
inline Instance E5() { return Additive({10, 1, 1}, {1, 1, 1}, 2); }

// v = (6,4,2), c = (1,1,1), B = 2.
inline Instance Skewed() { return Additive({6, 4, 2}, {1, 1, 1}, 2); }

// Deterministic stream of corpus-style instances for property tests.
inline std::vector<Instance> RandomInstances(const std::string& family,
                                             int count, int n_max,
                                             std::uint64_t seed) {
  cli::GeneratorSpec spec = corpus::FamilySpec(family, n_max);
  spec.seed = seed;
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) out.push_back(cli::GenerateInstance(spec, k));
  return out;
}

}  // namespace bfm::fixtures

#endif  // BFM_TESTS_SUPPORT_FIXTURES_H_
