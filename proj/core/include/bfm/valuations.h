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

#ifndef BFM_VALUATIONS_H_
#define BFM_VALUATIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfm/agent_set.h"
#include "bfm/rational.h"
#include "bfm/valuation.h"

namespace bfm {

// v(S) = sum of item values.
class AdditiveValuation : public Valuation {
 public:
  explicit AdditiveValuation(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  std::string_view kind() const override { return "additive"; }
  std::string CanonicalForm() const override;

 protected:
  Rational Compute(const AgentSet& s) const override;

 private:
  std::vector<Rational> values_;
};

// v(S) = total weight of the union of the agents' covered elements.
class CoverageValuation : public Valuation {
 public:
  // covers[a] lists element indices into weights.
  CoverageValuation(std::vector<Rational> weights,
                    std::vector<std::vector<int>> covers,
                    std::vector<std::string> element_names = {});

  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::string_view kind() const override { return "coverage"; }
  std::string CanonicalForm() const override;

 protected:
  Rational Compute(const AgentSet& s) const override;

 private:
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::string> names_;
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> cover_bits_;
};

struct MatchingEdge {
  AgentIndex agent;
  int task;
  Rational value;
};

// v(S) = weight of a maximum-weight matching between S and the tasks.
class MatchingValuation : public Valuation {
 public:
  MatchingValuation(int num_agents, int num_tasks,
                    std::vector<MatchingEdge> edges,
                    std::vector<std::string> task_names = {});

  int num_tasks() const { return num_tasks_; }
  const std::vector<MatchingEdge>& edges() const { return edges_; }
  const std::vector<std::string>& task_names() const { return names_; }
  std::string_view kind() const override { return "matching"; }
  std::string CanonicalForm() const override;

  // A maximum-weight matching of S as agent -> task over real edges.
  std::map<AgentIndex, int> MaxMatching(const AgentSet& s) const;

 protected:
  Rational Compute(const AgentSet& s) const override;

  // weight_[a][t], absent edges hold zero.
  std::vector<std::vector<Rational>> weight_;
  std::vector<std::vector<char>> has_edge_;

 private:
  int num_tasks_;
  std::vector<MatchingEdge> edges_;
  std::vector<std::string> names_;
  // Integer copy of weight_ scaled by a common denominator, when it fits.
  std::optional<std::vector<std::vector<std::int64_t>>> scaled_;
  Rational scale_;
};

// Matching valuation in which every edge into task t carries the task's
// value.
class TaskValuedMatching : public MatchingValuation {
 public:
  TaskValuedMatching(int num_agents, std::vector<Rational> task_values,
                     std::vector<std::pair<AgentIndex, int>> edges,
                     std::vector<std::string> task_names = {});

  const std::vector<Rational>& task_values() const { return task_values_; }
  const std::vector<std::pair<AgentIndex, int>>& agent_edges() const {
    return agent_edges_;
  }
  std::string_view kind() const override { return "task_matching"; }
  std::string CanonicalForm() const override;

  // A maximum-weight matching of S that matches every agent of S. Throws
  // kContractViolation when none exists.
  std::map<AgentIndex, int> ExtractAssignment(const AgentSet& s) const;

 private:
  std::vector<Rational> task_values_;
  std::vector<std::pair<AgentIndex, int>> agent_edges_;
};

}  // namespace bfm

#endif  // BFM_VALUATIONS_H_
