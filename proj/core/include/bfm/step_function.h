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

#ifndef BFM_STEP_FUNCTION_H_
#define BFM_STEP_FUNCTION_H_

#include <functional>
#include <optional>
#include <vector>

#include "bfm/rational.h"
#include "bfm/sweep.h"

namespace bfm {

// Piecewise-constant function of a bid b >= 0. With breakpoints
// 0 = t_0 < t_1 < ... < t_k it takes point_values[j] at t_j and
// interval_values[j] on (t_j, t_{j+1}), the last interval unbounded.
class StepFunction {
 public:
  StepFunction();  // Zero everywhere.
  StepFunction(std::vector<Rational> breakpoints,
               std::vector<Rational> point_values,
               std::vector<Rational> interval_values);
  // From a full sweep started at 0.
  static StepFunction FromPieces(
      const std::vector<SweepPiece<Rational>>& pieces);

  Rational Value(const Rational& b) const;
  // Value on (x, x + eps).
  Rational ValueRightOf(const Rational& x) const;

  // Smallest breakpoint t > floor at which pred(value) stops being equal to
  // its value just right of floor, if any.
  std::optional<Rational> NextBreakWhere(
      const Rational& floor,
      const std::function<bool(const Rational&)>& pred) const;

  StepFunction SuffixMax() const;
  static StepFunction Max(const StepFunction& a, const StepFunction& b);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& point_values() const { return point_values_; }
  const std::vector<Rational>& interval_values() const {
    return interval_values_;
  }

 private:
  // Index of the last breakpoint <= b.
  std::size_t Locate(const Rational& b) const;
  void Simplify();

  std::vector<Rational> breakpoints_;
  std::vector<Rational> point_values_;
  std::vector<Rational> interval_values_;
};

}  // namespace bfm

#endif  // BFM_STEP_FUNCTION_H_
