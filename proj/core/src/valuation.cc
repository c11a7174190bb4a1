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

#include "bfm/valuation.h"

#include "bfm/error.h"

namespace bfm {
namespace {

std::atomic<std::uint64_t> next_uid{1};

}  // namespace

Valuation::Valuation(int num_agents)
    : num_agents_(num_agents), uid_(next_uid.fetch_add(1)) {
  if (num_agents < 0 || num_agents > kMaxAgents) {
    throw Error(ErrorCode::kSizeLimit,
                "agent count " + std::to_string(num_agents) + " out of range");
  }
}

Valuation::~Valuation() = default;

Rational Valuation::Value(const AgentSet& s) const {
  if (s.Bound() > num_agents_) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown agent id " + std::to_string(s.Bound()));
  }
  if (num_agents_ <= kDenseLimit) {
    std::call_once(dense_once_, [this] {
      dense_ = std::make_unique<Slot[]>(std::size_t{1} << num_agents_);
    });
    Slot& slot = dense_[s.LowWord()];
    if (slot.state.load(std::memory_order_acquire) == 2) return slot.value;
    Rational v = Compute(s);
    std::uint8_t expected = 0;
    if (slot.state.compare_exchange_strong(expected, 1,
                                           std::memory_order_acquire)) {
      slot.value = v;
      slot.state.store(2, std::memory_order_release);
    }
    return v;
  }
  if (num_agents_ <= kHashLimit) {
    {
      std::shared_lock lock(hash_mu_);
      auto it = hash_.find(s.LowWord());
      if (it != hash_.end()) return it->second;
    }
    Rational v = Compute(s);
    std::unique_lock lock(hash_mu_);
    hash_.emplace(s.LowWord(), v);
    return v;
  }
  return Compute(s);
}

Rational Valuation::Marginal(const AgentSet& s, AgentIndex i) const {
  if (i < 0 || i >= num_agents_) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown agent id " + std::to_string(i + 1));
  }
  if (s.Contains(i)) {
    throw Error(ErrorCode::kInvalidArgument,
                "agent " + std::to_string(i + 1) + " already in the set");
  }
  return Value(s.With(i)) - Value(s);
}

}  // namespace bfm
