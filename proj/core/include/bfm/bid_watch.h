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

#ifndef BFM_BID_WATCH_H_
#define BFM_BID_WATCH_H_

#include <optional>

#include "bfm/agent_set.h"
#include "bfm/rational.h"

namespace bfm {

// Collects, during one run of an allocation rule, the smallest bid above
// `floor` at which some comparison involving `agent`'s bid could change
// outcome. Every comparison the rule makes against the watched bid reports
// its root here; the run's outcome is then constant for bids strictly
// between `floor` and `next`, provided the run's bid lies in that range.
struct BidWatch {
  AgentIndex agent = -1;
  Rational floor;
  std::optional<Rational> next;

  void Note(const Rational& t) {
    if (t > floor && (!next || t < *next)) next = t;
  }
};

inline bool Watching(const BidWatch* watch, AgentIndex a) {
  return watch != nullptr && watch->agent == a;
}

}  // namespace bfm

#endif  // BFM_BID_WATCH_H_
