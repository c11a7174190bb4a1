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

#include "bfm/step_function.h"

#include <algorithm>

#include "bfm/error.h"

namespace bfm {

StepFunction::StepFunction()
    : breakpoints_{Rational()},
      point_values_{Rational()},
      interval_values_{Rational()} {}

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<Rational> point_values,
                           std::vector<Rational> interval_values)
    : breakpoints_(std::move(breakpoints)),
      point_values_(std::move(point_values)),
      interval_values_(std::move(interval_values)) {
  if (breakpoints_.empty() || breakpoints_.front() != Rational() ||
      point_values_.size() != breakpoints_.size() ||
      interval_values_.size() != breakpoints_.size() ||
      !std::is_sorted(breakpoints_.begin(), breakpoints_.end())) {
    throw Error(ErrorCode::kInternal, "malformed step function");
  }
  Simplify();
}

StepFunction StepFunction::FromPieces(
    const std::vector<SweepPiece<Rational>>& pieces) {
  std::vector<Rational> bps, points, intervals;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const SweepPiece<Rational>& p = pieces[j];
    if (p.point) {
      bps.push_back(p.lo);
      points.push_back(p.value);
    } else {
      intervals.push_back(p.value);
    }
  }
  if (pieces.empty() || pieces.back().point || pieces.back().hi ||
      intervals.size() != bps.size()) {
    throw Error(ErrorCode::kInternal, "sweep did not cover every bid");
  }
  return StepFunction(std::move(bps), std::move(points), std::move(intervals));
}

std::size_t StepFunction::Locate(const Rational& b) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), b);
  if (it == breakpoints_.begin()) return 0;
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational StepFunction::Value(const Rational& b) const {
  std::size_t k = Locate(b);
  return breakpoints_[k] == b ? point_values_[k] : interval_values_[k];
}

Rational StepFunction::ValueRightOf(const Rational& x) const {
  return interval_values_[Locate(x)];
}

std::optional<Rational> StepFunction::NextBreakWhere(
    const Rational& floor,
    const std::function<bool(const Rational&)>& pred) const {
  std::size_t k = Locate(floor);
  const bool current = pred(interval_values_[k]);
  for (std::size_t j = k + 1; j < breakpoints_.size(); ++j) {
    if (pred(point_values_[j]) != current ||
        pred(interval_values_[j]) != current) {
      return breakpoints_[j];
    }
  }
  return std::nullopt;
}

StepFunction StepFunction::SuffixMax() const {
  const std::size_t k = breakpoints_.size();
  std::vector<Rational> points(k), intervals(k);
  intervals[k - 1] = interval_values_[k - 1];
  points[k - 1] = bfm::Max(point_values_[k - 1], intervals[k - 1]);
  for (std::size_t j = k - 1; j-- > 0;) {
    intervals[j] = bfm::Max(interval_values_[j], points[j + 1]);
    points[j] = bfm::Max(point_values_[j], intervals[j]);
  }
  return StepFunction(breakpoints_, std::move(points), std::move(intervals));
}

StepFunction StepFunction::Max(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> bps;
  std::merge(a.breakpoints_.begin(), a.breakpoints_.end(),
             b.breakpoints_.begin(), b.breakpoints_.end(),
             std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Rational> points, intervals;
  points.reserve(bps.size());
  intervals.reserve(bps.size());
  for (const Rational& t : bps) {
    points.push_back(bfm::Max(a.Value(t), b.Value(t)));
    intervals.push_back(bfm::Max(a.ValueRightOf(t), b.ValueRightOf(t)));
  }
  return StepFunction(std::move(bps), std::move(points), std::move(intervals));
}

void StepFunction::Simplify() {
  std::size_t out = 1;
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (point_values_[j] == interval_values_[out - 1] &&
        interval_values_[j] == interval_values_[out - 1]) {
      continue;
    }
    breakpoints_[out] = breakpoints_[j];
    point_values_[out] = point_values_[j];
    interval_values_[out] = interval_values_[j];
    ++out;
  }
  breakpoints_.resize(out);
  point_values_.resize(out);
  interval_values_.resize(out);
}

}  // namespace bfm
