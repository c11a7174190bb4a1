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

#ifndef BFM_SWEEP_H_
#define BFM_SWEEP_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bfm/bid_watch.h"
#include "bfm/error.h"
#include "bfm/rational.h"

namespace bfm {

// One constant piece of a function of a single agent's bid: either the
// point {lo} or the open interval (lo, hi), hi absent meaning unbounded.
template <typename V>
struct SweepPiece {
  Rational lo;
  std::optional<Rational> hi;
  bool point = true;
  // A bid inside the piece at which `value` was observed.
  Rational probe;
  V value{};
};

template <typename V>
struct SweepResult {
  std::vector<SweepPiece<V>> pieces;
  int runs = 0;
};

// Evaluates `eval(bid, watch)` on alternating points and open intervals
// starting at `start`, using the roots reported to the watch to jump from
// one piece to the next. Stops after the first piece for which `stop`
// returns true, or when no further breakpoint exists.
template <typename V>
SweepResult<V> Sweep(
    AgentIndex agent, const Rational& start,
    const std::function<V(const Rational&, BidWatch&)>& eval,
    const std::function<bool(const SweepPiece<V>&)>& stop = nullptr,
    int max_runs = 100000) {
  SweepResult<V> out;
  auto guard = [&]() {
    if (++out.runs > max_runs) {
      throw Error(ErrorCode::kInternal,
                  "bid sweep for agent " + std::to_string(agent + 1) +
                      " exceeded " + std::to_string(max_runs) + " runs");
    }
  };
  Rational x = start;
  for (;;) {
    BidWatch at{agent, x, std::nullopt};
    guard();
    SweepPiece<V> point{x, x, true, x, eval(x, at)};
    out.pieces.push_back(point);
    if (stop && stop(out.pieces.back())) break;

    Rational probe = at.next ? (x + *at.next) / 2 : x + 1;
    BidWatch inside{agent, x, std::nullopt};
    V value{};
    for (;;) {
      inside = BidWatch{agent, x, std::nullopt};
      guard();
      value = eval(probe, inside);
      if (inside.next && *inside.next <= probe) {
        probe = (x + *inside.next) / 2;
        continue;
      }
      break;
    }
    out.pieces.push_back(SweepPiece<V>{x, inside.next, false, probe, value});
    if (stop && stop(out.pieces.back())) break;
    if (!inside.next) break;
    x = *inside.next;
  }
  return out;
}

}  // namespace bfm

#endif  // BFM_SWEEP_H_
