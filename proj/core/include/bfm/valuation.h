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

#ifndef BFM_VALUATION_H_
#define BFM_VALUATION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "bfm/agent_set.h"
#include "bfm/rational.h"

namespace bfm {

// Monotone submodular set function over agents 0..n-1, queried as a value
// oracle. Subclasses implement Compute(); Value() adds validation and a
// memo keyed by bitmask.
class Valuation {
 public:
  explicit Valuation(int num_agents);
  virtual ~Valuation();

  Valuation(const Valuation&) = delete;
  Valuation& operator=(const Valuation&) = delete;

  int num_agents() const { return num_agents_; }
  // Process-unique id, used to key caches without holding pointers.
  std::uint64_t uid() const { return uid_; }

  Rational Value(const AgentSet& s) const;
  // v(S + i) - v(S). Throws kInvalidArgument if i is already in S.
  Rational Marginal(const AgentSet& s, AgentIndex i) const;

  virtual std::string_view kind() const = 0;
  // Stable text describing the function, used for digests.
  virtual std::string CanonicalForm() const = 0;

 protected:
  virtual Rational Compute(const AgentSet& s) const = 0;

 private:
  struct Slot {
    std::atomic<std::uint8_t> state{0};
    Rational value;
  };
  static constexpr int kDenseLimit = 20;
  static constexpr int kHashLimit = 64;

  const int num_agents_;
  const std::uint64_t uid_;

  mutable std::once_flag dense_once_;
  mutable std::unique_ptr<Slot[]> dense_;

  mutable std::shared_mutex hash_mu_;
  mutable std::unordered_map<std::uint64_t, Rational> hash_;
};

}  // namespace bfm

#endif  // BFM_VALUATION_H_
