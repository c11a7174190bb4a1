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

#ifndef BFM_TOOLS_CLI_GENERATOR_H_
#define BFM_TOOLS_CLI_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bfm/instance.h"
#include "bfm/rational.h"

namespace bfm::cli {

// Uniform over {lo/den, (lo+1)/den, ..., hi/den}.
struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 10;
  std::int64_t den = 1;
};

struct GeneratorSpec {
  std::string family = "additive";  // additive|coverage|matching|task_matching
  int n_min = 6;
  int n_max = 6;
  IntRange cost{1, 10, 1};
  IntRange value{1, 10, 1};
  // Budget is this fraction of the total cost (at least 1 when that is 0).
  IntRange budget_fraction{1, 2, 2};
  int elements = 8;  // coverage
  int tasks = 4;     // matching families
  // Cover / edge probability, as p/q.
  std::int64_t density_num = 1;
  std::int64_t density_den = 3;
  std::optional<Rational> theta_cap;
  std::uint64_t seed = 1;
  int max_attempts = 2000;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Platform-independent draws; std distributions differ across stdlibs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t Bits() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound);
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  bool Bernoulli(std::int64_t num, std::int64_t den);
  Rational Draw(const IntRange& range);
  // Exact k/2^53.
  Rational Unit();

 private:
  std::mt19937_64 engine_;
};

void ValidateGeneratorSpec(const GeneratorSpec& spec);

// The index-th instance of the stream determined by spec.seed.
Instance GenerateInstance(const GeneratorSpec& spec, std::uint64_t index);

}  // namespace bfm::cli

#endif  // BFM_TOOLS_CLI_GENERATOR_H_
