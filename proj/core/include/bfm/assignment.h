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

#ifndef BFM_ASSIGNMENT_H_
#define BFM_ASSIGNMENT_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bfm/error.h"

namespace bfm {

// Maximum-weight assignment of every row to a distinct column (rows <= cols)
// by the shortest augmenting path form of the Hungarian method. Works for
// any exact ordered field or integer type W. Returns the column of each row.
template <typename W>
std::vector<int> SolveMaxAssignment(const std::vector<std::vector<W>>& weight) {
  const int n = static_cast<int>(weight.size());
  if (n == 0) return {};
  const int m = static_cast<int>(weight[0].size());
  if (m < n) {
    throw Error(ErrorCode::kInvalidArgument, "assignment needs rows <= cols");
  }
  // Potentials and matching are 1-based; column 0 is a virtual root.
  std::vector<W> u(n + 1, W(0)), v(m + 1, W(0));
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  std::vector<W> minv(m + 1, W(0));
  std::vector<char> used(m + 1), has_min(m + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(has_min.begin(), has_min.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      W delta(0);
      int j1 = -1;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        // Costs are negated weights, so this is a minimization.
        W cur = -weight[i0 - 1][j - 1] - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = 1;
          way[j] = j0;
        }
        if (j1 < 0 || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace bfm

#endif  // BFM_ASSIGNMENT_H_
